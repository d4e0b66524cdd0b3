//! Sweep assembly: one concavity report per valid parameter tuple.

use flag_concavity::concavity::{report, ConcavityReport};
use flag_concavity::domains::DomainSpec;

/// Reports for all valid SU domains with p + p′ ≤ max_n, in parameter order.
pub fn su_reports(max_n: u32) -> Vec<ConcavityReport> {
    DomainSpec::enumerate_su(max_n)
        .iter()
        .map(|spec| report(spec).expect("enumerated specs are valid"))
        .collect()
}

/// Reports for all valid Sp domains with n ≤ max_n, in parameter order.
pub fn sp_reports(max_n: u32) -> Vec<ConcavityReport> {
    DomainSpec::enumerate_sp(max_n)
        .iter()
        .map(|spec| report(spec).expect("enumerated specs are valid"))
        .collect()
}
