//! Attractiveness sets, the minimal-attractiveness invariant `d_ma`, and the
//! closed-form bounds it is compared against.
//!
//! For a root α ∈ Φ the attractiveness set is
//!
//! ```text
//! At(α) = { β ∈ Λ(𝔲⁻) : α − β ∈ Γ }
//! ```
//!
//! and `d_ma` is the minimum of |At(α)| over Φ. The closed forms
//! min{r+p′−r′, p−r+p′} (SU) and min{n−p, n−q} (Sp) are evaluated verbatim
//! and reported next to the combinatorial value; where the two disagree the
//! combinatorial enumeration is authoritative, and the report only flags the
//! disagreement.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use thiserror::Error;

use crate::domains::{DomainError, DomainSpec, RootPartition};
use crate::roots::Root;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ConcavityError {
    #[error("root {0} is not in phi")]
    AlphaNotInPhi(Root),
    #[error("operation requires an SU spec")]
    NotSu,
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// The attractiveness set of a root α ∈ Φ, with the witnessing pairs
/// (β, γ = α − β).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Attractiveness {
    alpha: Root,
    pairs: Vec<(Root, Root)>,
}

impl Attractiveness {
    pub fn alpha(&self) -> &Root {
        &self.alpha
    }

    /// Pairs (β, γ) in canonical β-order; γ is determined by β.
    pub fn pairs(&self) -> &[(Root, Root)] {
        &self.pairs
    }

    pub fn betas(&self) -> impl Iterator<Item = &Root> {
        self.pairs.iter().map(|(beta, _)| beta)
    }

    pub fn gammas(&self) -> impl Iterator<Item = &Root> {
        self.pairs.iter().map(|(_, gamma)| gamma)
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }
}

/// Exhaustively pairs Λ(𝔲⁻) against Γ: At(α) = {β : α − β ∈ Γ}.
pub fn attractiveness(
    alpha: &Root,
    part: &RootPartition,
) -> Result<Attractiveness, ConcavityError> {
    if !part.phi().contains(alpha) {
        return Err(ConcavityError::AlphaNotInPhi(alpha.clone()));
    }
    let pairs: Vec<(Root, Root)> = part
        .lambda_u_minus()
        .iter()
        .filter_map(|beta| {
            let gamma = alpha.minus(beta);
            part.gamma().contains(&gamma).then(|| (beta.clone(), gamma))
        })
        .collect();
    // distinct betas force distinct gammas: gamma = alpha - beta
    debug_assert_eq!(
        pairs.iter().map(|(_, g)| g).collect::<BTreeSet<_>>().len(),
        pairs.len()
    );
    Ok(Attractiveness {
        alpha: alpha.clone(),
        pairs,
    })
}

/// Minimal attractiveness over Φ, with the set of minimizing roots.
///
/// Degenerate inputs (Λ(𝔲⁻) = ∅ or Φ = ∅) yield (0, Φ) rather than an
/// error; the value 0 is the honest degeneration of the bound.
pub fn d_ma(part: &RootPartition) -> (usize, BTreeSet<Root>) {
    if part.lambda_u_minus().is_empty() || part.phi().is_empty() {
        return (0, part.phi().clone());
    }
    let sizes: BTreeMap<Root, usize> = part
        .phi()
        .iter()
        .map(|alpha| {
            let at = attractiveness(alpha, part).expect("alpha ranges over phi");
            (alpha.clone(), at.size())
        })
        .collect();
    let value = *sizes.values().min().expect("phi is nonempty");
    let argmin = sizes
        .iter()
        .filter(|(_, size)| **size == value)
        .map(|(alpha, _)| alpha.clone())
        .collect();
    (value, argmin)
}

/// The printed closed-form lower bound, evaluated verbatim:
/// min{r+p′−r′, p−r+p′} for SU, min{n−p, n−q} for Sp.
pub fn closed_form_bound(spec: &DomainSpec) -> Result<u64, DomainError> {
    spec.ensure_valid()?;
    Ok(match *spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => {
            let upper = (r + p_prime - r_prime) as u64;
            let lower = (p - r + p_prime) as u64;
            upper.min(lower)
        }
        DomainSpec::Sp { n, p, q } => ((n - p) as u64).min((n - q) as u64),
    })
}

/// Codimension contributed by a coordinate functional sitting at a spot of
/// the upper (resp. lower) off-diagonal block, from the block shapes of the
/// cycle coordinates: upper = r + (p′−r′), lower = (p−r) + r′.
///
/// This is pure formula evaluation (no validity check). The lower value
/// differs from the second argument of the printed closed form, which reads
/// p−r+p′; the two coincide exactly when r′ = p′.
pub fn su_spot_codims(spec: &DomainSpec) -> Result<(i64, i64), ConcavityError> {
    match *spec {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } => {
            let (p, p_prime, r, r_prime) = (p as i64, p_prime as i64, r as i64, r_prime as i64);
            Ok((r + (p_prime - r_prime), (p - r) + r_prime))
        }
        DomainSpec::Sp { .. } => Err(ConcavityError::NotSu),
    }
}

/// Everything the CLI reports for one domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConcavityReport {
    pub spec: DomainSpec,
    pub dim_u_minus: usize,
    /// |At(α)| for every α ∈ Φ, in canonical α-order.
    pub per_alpha: BTreeMap<Root, usize>,
    pub d_ma: usize,
    pub argmin: BTreeSet<Root>,
    /// The printed closed form, evaluated verbatim.
    pub paper_bound: u64,
    /// min of [`su_spot_codims`]; absent for Sp.
    pub derived_bound_su: Option<u64>,
    pub convex_degenerate: bool,
    /// d_ma == paper_bound. Diagnostic only; a mismatch is a property of
    /// the closed form, not an engine failure.
    pub paper_formula_match: bool,
}

pub fn report(spec: &DomainSpec) -> Result<ConcavityReport, DomainError> {
    spec.ensure_valid()?;
    let part = spec.partition()?;
    let per_alpha: BTreeMap<Root, usize> = part
        .phi()
        .iter()
        .map(|alpha| {
            let at = attractiveness(alpha, &part).expect("alpha ranges over phi");
            (alpha.clone(), at.size())
        })
        .collect();
    let (d_ma_value, argmin) = d_ma(&part);
    let paper_bound = closed_form_bound(spec)?;
    let derived_bound_su = match spec {
        DomainSpec::Su { .. } => {
            let (upper, lower) = su_spot_codims(spec).expect("spec is SU");
            Some(upper.min(lower) as u64)
        }
        DomainSpec::Sp { .. } => None,
    };
    Ok(ConcavityReport {
        spec: *spec,
        dim_u_minus: part.lambda_u_minus().len(),
        per_alpha,
        d_ma: d_ma_value,
        argmin,
        paper_bound,
        derived_bound_su,
        convex_degenerate: part.is_convex_degenerate(),
        paper_formula_match: d_ma_value as u64 == paper_bound,
    })
}
