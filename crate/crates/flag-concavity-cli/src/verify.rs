//! The `verify` harness: engine-vs-oracle consistency over a sweep range.
//!
//! Five failure classes are counted per run; any nonzero counter means the
//! closed-form combinatorics and the matrix oracle disagree and maps to exit
//! code 2. Disagreement between d_ma and the printed closed-form bounds is
//! tallied separately and is never a failure: those formulas are exactly the
//! claims under scrutiny.

use flag_concavity::concavity::{attractiveness, d_ma, report};
use flag_concavity::domains::DomainSpec;
use flag_concavity::oracle::{
    build_basis, q0_member, random_functional, transversality_check, Functional,
    LinearizationTable, OracleError,
};

pub struct FormulaMismatch {
    pub spec: DomainSpec,
    pub d_ma: usize,
    pub paper_bound: u64,
}

pub struct VerifyOutcome {
    pub instances_checked: usize,
    pub membership_mismatches: usize,
    pub rank_mismatches: usize,
    pub theorem_main_violations: usize,
    pub maximum_prop_violations: usize,
    pub transversality_failures: usize,
    pub paper_formula_mismatches: Vec<FormulaMismatch>,
}

impl VerifyOutcome {
    /// True iff every failure counter is zero (formula mismatches excluded).
    pub fn is_consistent(&self) -> bool {
        self.membership_mismatches == 0
            && self.rank_mismatches == 0
            && self.theorem_main_violations == 0
            && self.maximum_prop_violations == 0
            && self.transversality_failures == 0
    }
}

/// splitmix64-style absorption step.
fn mix(state: u64, value: u64) -> u64 {
    let mut z = state ^ value.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-instance seed derived from the base seed and the parameters, so
/// results do not depend on enumeration order.
pub fn instance_seed(base: u64, spec: &DomainSpec) -> u64 {
    let tags: [u64; 5] = match *spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => [1, p as u64, p_prime as u64, r as u64, r_prime as u64],
        DomainSpec::Sp { n, p, q } => [2, n as u64, p as u64, q as u64, 0],
    };
    tags.iter().fold(base, |h, &t| mix(h, t))
}

/// Seed of one sampled functional.
pub fn trial_seed(base: u64, spec: &DomainSpec, trial: u32) -> u64 {
    mix(instance_seed(base, spec), trial as u64)
}

/// Runs every check on every instance: membership agreement on all roots,
/// the rank identity and transversality on all of Φ, and the two linearized
/// inequalities on `trials` seeded functionals.
pub fn run(specs: &[DomainSpec], trials: u32, seed: u64) -> Result<VerifyOutcome, OracleError> {
    let mut outcome = VerifyOutcome {
        instances_checked: 0,
        membership_mismatches: 0,
        rank_mismatches: 0,
        theorem_main_violations: 0,
        maximum_prop_violations: 0,
        transversality_failures: 0,
        paper_formula_mismatches: Vec::new(),
    };
    for spec in specs {
        outcome.instances_checked += 1;
        let part = spec.partition()?;
        let basis = build_basis(spec)?;
        let table = LinearizationTable::build(&part, &basis)?;

        let q0 = spec.q0_roots()?;
        for delta in spec.root_system()?.roots() {
            if q0_member(delta, spec)? != q0.contains(delta) {
                outcome.membership_mismatches += 1;
            }
        }

        let mut coordinate_min: Option<usize> = None;
        for alpha in part.phi() {
            let at = attractiveness(alpha, &part)?;
            let codim = table.codim(&Functional::coordinate(alpha));
            if codim != at.size() {
                outcome.rank_mismatches += 1;
            }
            coordinate_min = Some(coordinate_min.map_or(codim, |m| m.min(codim)));
            if !transversality_check(alpha, &part, &basis)? {
                outcome.transversality_failures += 1;
            }
        }

        let (bound, _) = d_ma(&part);
        if !part.phi().is_empty() {
            let min_codim = coordinate_min.expect("phi is nonempty");
            for trial in 0..trials {
                let l = random_functional(trial_seed(seed, spec, trial), &part)?;
                let codim = table.codim(&l);
                if codim < bound {
                    outcome.theorem_main_violations += 1;
                }
                if codim < min_codim {
                    outcome.maximum_prop_violations += 1;
                }
            }
        }

        let rep = report(spec)?;
        if !rep.paper_formula_match {
            outcome.paper_formula_mismatches.push(FormulaMismatch {
                spec: *spec,
                d_ma: rep.d_ma,
                paper_bound: rep.paper_bound,
            });
        }
    }
    Ok(outcome)
}
