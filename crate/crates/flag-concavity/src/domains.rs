//! Flag-domain parameters and the induced partition of the ambient root
//! system.
//!
//! A [`DomainSpec`] names an open orbit of `SU(p,p′)` in the Grassmannian
//! `Gr_{r+r′}(ℂ^{p+p′})`, or of `Sp(2n,ℝ)` in the Grassmannian of isotropic
//! (p+q)-planes of `ℂ^{2n}`. From the base point of the corresponding compact
//! cycle the ambient roots split five ways:
//!
//! * `lambda_k`   — roots of the complexified maximal compact 𝔨,
//! * `lambda_q0`  — roots of the isotropy parabolic 𝔮₀ at the base point,
//! * `lambda_u_minus = lambda_k \ lambda_q0` — coordinates on the cycle,
//! * `gamma = lambda_q0 \ lambda_k` — tangent directions of the isotropy
//!   orbit in the cycle space,
//! * `phi` — everything else; the index set of the coordinate functionals.
//!
//! Membership in `lambda_q0` is decided here by closed-form index rules read
//! off the block shape of the stabilizer. The matrix-action test in
//! [`crate::oracle::q0_member`] decides the same question independently, so
//! any slip in the rules below is detectable.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

use crate::roots::{Family, Root, RootSystem};

/// Parameters of a flag domain; see the module docs.
///
/// `Su` carries the signature (p, p′) of the Hermitian form and the signature
/// (r, r′) of the plane; `Sp` carries the rank n and the signature (p, q) of
/// the isotropic plane.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DomainSpec {
    Su {
        p: u32,
        p_prime: u32,
        r: u32,
        r_prime: u32,
    },
    Sp {
        n: u32,
        p: u32,
        q: u32,
    },
}

/// A single violated parameter constraint. Violations are data, not errors:
/// [`DomainSpec::validate`] returns all of them at once.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// A structurally positive parameter (p, p′ or n) is zero.
    NonPositive { field: &'static str },
    /// r exceeds p, or r′ exceeds p′.
    BlockExceeded {
        field: &'static str,
        bound: &'static str,
    },
    /// SU: the plane dimension k = r + r′ must satisfy 1 ≤ k ≤ n − 1.
    PlaneDimension { k: u32, n: u32 },
    /// Sp: the isotropic dimension k = p + q must satisfy 1 ≤ k < n.
    IsotropicDimension { k: u32, n: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositive { field } => write!(f, "{} must be positive", field),
            Violation::BlockExceeded { field, bound } => write!(f, "{} exceeds {}", field, bound),
            Violation::PlaneDimension { k, n } => {
                write!(
                    f,
                    "plane dimension k = r+r' = {} must satisfy 1 <= k <= {}",
                    k,
                    n - 1
                )
            }
            Violation::IsotropicDimension { k, n } => {
                write!(
                    f,
                    "isotropic dimension p+q = {} must satisfy 1 <= p+q < {}",
                    k, n
                )
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum DomainError {
    #[error("invalid domain parameters: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
}

fn format_violations(vs: &[Violation]) -> alloc::string::String {
    use alloc::string::ToString;
    let mut out = alloc::string::String::new();
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        out.push_str(&v.to_string());
    }
    out
}

/// The base point of the compact cycle, as a coordinate subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BasePoint {
    /// Span of the standard basis vectors indexed by `subset` ⊆ {1..n}.
    Su { subset: BTreeSet<usize> },
    /// Span of v_j for j ∈ `plus` (= {1..p}) and of the conjugate vectors
    /// v_{n+j} for j ∈ `conj` (= {n−q+1..n}) inside ℂ^{2n}.
    Sp {
        rank: usize,
        plus: BTreeSet<usize>,
        conj: BTreeSet<usize>,
    },
}

impl BasePoint {
    /// Dimension of the base-point subspace (k = r + r′ or p + q).
    pub fn dim(&self) -> usize {
        match self {
            BasePoint::Su { subset } => subset.len(),
            BasePoint::Sp { plus, conj, .. } => plus.len() + conj.len(),
        }
    }

    /// 0-based column indices of the subspace in the matrix realization
    /// (n columns for SU, 2n for Sp).
    pub fn columns(&self) -> Vec<usize> {
        match self {
            BasePoint::Su { subset } => subset.iter().map(|i| i - 1).collect(),
            BasePoint::Sp { rank, plus, conj } => plus
                .iter()
                .map(|j| j - 1)
                .chain(conj.iter().map(|j| rank + j - 1))
                .collect(),
        }
    }
}

impl DomainSpec {
    pub fn su(p: u32, p_prime: u32, r: u32, r_prime: u32) -> Self {
        DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        }
    }

    pub fn sp(n: u32, p: u32, q: u32) -> Self {
        DomainSpec::Sp { n, p, q }
    }

    pub fn family(&self) -> Family {
        match self {
            DomainSpec::Su { .. } => Family::TypeA,
            DomainSpec::Sp { .. } => Family::TypeC,
        }
    }

    /// Rank of the weight basis: p + p′ for SU, n for Sp.
    pub fn rank(&self) -> usize {
        match *self {
            DomainSpec::Su { p, p_prime, .. } => (p + p_prime) as usize,
            DomainSpec::Sp { n, .. } => n as usize,
        }
    }

    /// All violated constraints; empty iff the spec is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        match *self {
            DomainSpec::Su {
                p,
                p_prime,
                r,
                r_prime,
            } => {
                if p == 0 {
                    out.push(Violation::NonPositive { field: "p" });
                }
                if p_prime == 0 {
                    out.push(Violation::NonPositive { field: "p'" });
                }
                if r > p {
                    out.push(Violation::BlockExceeded {
                        field: "r",
                        bound: "p",
                    });
                }
                if r_prime > p_prime {
                    out.push(Violation::BlockExceeded {
                        field: "r'",
                        bound: "p'",
                    });
                }
                let n = p + p_prime;
                let k = r + r_prime;
                if n > 0 && !(1 <= k && k < n) {
                    out.push(Violation::PlaneDimension { k, n });
                }
            }
            DomainSpec::Sp { n, p, q } => {
                if n == 0 {
                    out.push(Violation::NonPositive { field: "n" });
                }
                let k = p + q;
                if n > 0 && !(1 <= k && k < n) {
                    out.push(Violation::IsotropicDimension { k, n });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<(), DomainError> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(DomainError::Invalid(violations))
        }
    }

    /// All valid SU specs with p + p′ ≤ max_n, in (p, p′, r, r′) order.
    /// Invalid tuples inside the cartesian range are skipped silently.
    pub fn enumerate_su(max_n: u32) -> Vec<DomainSpec> {
        let mut out = Vec::new();
        for p in 1..max_n {
            for p_prime in 1..=(max_n - p) {
                for r in 0..=p {
                    for r_prime in 0..=p_prime {
                        let spec = DomainSpec::su(p, p_prime, r, r_prime);
                        if spec.is_valid() {
                            out.push(spec);
                        }
                    }
                }
            }
        }
        out
    }

    /// All valid Sp specs with n ≤ max_n, in (n, p, q) order.
    pub fn enumerate_sp(max_n: u32) -> Vec<DomainSpec> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for p in 0..n {
                for q in 0..n {
                    let spec = DomainSpec::sp(n, p, q);
                    if spec.is_valid() {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }

    /// The ambient root system (A_{n−1} in gl(p+p′) coordinates, or C_n).
    pub fn root_system(&self) -> Result<RootSystem, DomainError> {
        self.ensure_valid()?;
        // valid specs always have rank >= 2
        Ok(RootSystem::build(self.family(), self.rank()).expect("valid spec has valid rank"))
    }

    /// The base point of the compact cycle as a coordinate subspace.
    pub fn base_point(&self) -> Result<BasePoint, DomainError> {
        self.ensure_valid()?;
        match *self {
            DomainSpec::Su { p, r, r_prime, .. } => {
                let mut subset = BTreeSet::new();
                subset.extend(1..=r as usize);
                subset.extend((p as usize + 1)..=(p + r_prime) as usize);
                Ok(BasePoint::Su { subset })
            }
            DomainSpec::Sp { n, p, q } => {
                let plus: BTreeSet<usize> = (1..=p as usize).collect();
                let conj: BTreeSet<usize> = (((n - q) as usize + 1)..=n as usize).collect();
                debug_assert!(plus.is_disjoint(&conj));
                Ok(BasePoint::Sp {
                    rank: n as usize,
                    plus,
                    conj,
                })
            }
        }
    }

    /// Roots of the complexified maximal compact subalgebra 𝔨.
    ///
    /// SU: e_i − e_j with i, j in the same diagonal block ({1..p} or
    /// {p+1..n}). Sp: the full gl(n) block, i.e. every e_j − e_k.
    pub fn k_roots(&self) -> Result<BTreeSet<Root>, DomainError> {
        let system = self.root_system()?;
        Ok(system
            .roots()
            .iter()
            .filter(|root| self.root_in_k(root))
            .cloned()
            .collect())
    }

    /// Roots of the isotropy parabolic 𝔮₀ at the base point, by the
    /// closed-form index rules.
    ///
    /// SU (with S the base-point index set): e_i − e_j ∈ 𝔮₀ iff not
    /// (j ∈ S and i ∉ S). Sp: e_j − e_k ∈ 𝔮₀ iff (k ≤ p ⇒ j ≤ p) and
    /// (j > n−q ⇒ k > n−q); e_j + e_k (j ≤ k) ∈ 𝔮₀ iff k ≤ n−q or j ≤ p;
    /// −e_j − e_k (j ≤ k) ∈ 𝔮₀ iff j > p or k > n−q.
    pub fn q0_roots(&self) -> Result<BTreeSet<Root>, DomainError> {
        let system = self.root_system()?;
        Ok(system
            .roots()
            .iter()
            .filter(|root| self.root_in_q0(root))
            .cloned()
            .collect())
    }

    /// The five-way partition of the ambient root system.
    pub fn partition(&self) -> Result<RootPartition, DomainError> {
        let system = self.root_system()?;
        let lambda_k = self.k_roots()?;
        let lambda_q0 = self.q0_roots()?;
        let lambda_u_minus: BTreeSet<Root> = lambda_k.difference(&lambda_q0).cloned().collect();
        let gamma: BTreeSet<Root> = lambda_q0.difference(&lambda_k).cloned().collect();
        let phi: BTreeSet<Root> = system
            .roots()
            .iter()
            .filter(|r| !lambda_k.contains(r) && !lambda_q0.contains(r))
            .cloned()
            .collect();
        debug_assert_eq!(
            lambda_k.len() + gamma.len() + phi.len(),
            system.len(),
            "lambda_k, gamma, phi must partition the root set"
        );
        Ok(RootPartition {
            system,
            lambda_k,
            lambda_q0,
            lambda_u_minus,
            gamma,
            phi,
        })
    }

    fn root_in_k(&self, root: &Root) -> bool {
        match *self {
            DomainSpec::Su { p, .. } => {
                let (i, j) = difference_indices(root).expect("type A root");
                (i <= p as usize) == (j <= p as usize)
            }
            DomainSpec::Sp { .. } => matches!(classify_c(root), Some(CRoot::Compact { .. })),
        }
    }

    fn root_in_q0(&self, root: &Root) -> bool {
        match *self {
            DomainSpec::Su { p, r, r_prime, .. } => {
                let (i, j) = difference_indices(root).expect("type A root");
                let in_s = |idx: usize| {
                    idx <= r as usize || (p as usize) < idx && idx <= (p + r_prime) as usize
                };
                !(in_s(j) && !in_s(i))
            }
            DomainSpec::Sp { n, p, q } => {
                let p = p as usize;
                let split = (n - q) as usize; // n - q
                match classify_c(root).expect("type C root") {
                    CRoot::Compact { j, k } => (k > p || j <= p) && (j <= split || k > split),
                    CRoot::SymPlus { j, k } => k <= split || j <= p,
                    CRoot::SymMinus { j, k } => j > p || k > split,
                }
            }
        }
    }
}

/// (i, j) with root = e_i − e_j, 1-based.
pub(crate) fn difference_indices(root: &Root) -> Option<(usize, usize)> {
    let mut plus = None;
    let mut minus = None;
    for (idx, &c) in root.coeffs().iter().enumerate() {
        match c {
            0 => {}
            1 if plus.is_none() => plus = Some(idx + 1),
            -1 if minus.is_none() => minus = Some(idx + 1),
            _ => return None,
        }
    }
    Some((plus?, minus?))
}

/// A type C root sorted into the gl(n) block or one of the symmetric blocks.
pub(crate) enum CRoot {
    /// e_j − e_k (j ≠ k)
    Compact { j: usize, k: usize },
    /// e_j + e_k with j ≤ k (j = k encodes 2e_j)
    SymPlus { j: usize, k: usize },
    /// −e_j − e_k with j ≤ k
    SymMinus { j: usize, k: usize },
}

pub(crate) fn classify_c(root: &Root) -> Option<CRoot> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut long: Option<(usize, i64)> = None;
    for (idx, &c) in root.coeffs().iter().enumerate() {
        match c {
            0 => {}
            1 => pos.push(idx + 1),
            -1 => neg.push(idx + 1),
            2 | -2 if long.is_none() => long = Some((idx + 1, c)),
            _ => return None,
        }
    }
    match (long, pos.len(), neg.len()) {
        (Some((j, 2)), 0, 0) => Some(CRoot::SymPlus { j, k: j }),
        (Some((j, -2)), 0, 0) => Some(CRoot::SymMinus { j, k: j }),
        (None, 1, 1) => Some(CRoot::Compact {
            j: pos[0],
            k: neg[0],
        }),
        (None, 2, 0) => Some(CRoot::SymPlus {
            j: pos[0],
            k: pos[1],
        }),
        (None, 0, 2) => Some(CRoot::SymMinus {
            j: neg[0],
            k: neg[1],
        }),
        _ => None,
    }
}

/// The five root sets derived from a [`DomainSpec`]; see the module docs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootPartition {
    system: RootSystem,
    lambda_k: BTreeSet<Root>,
    lambda_q0: BTreeSet<Root>,
    lambda_u_minus: BTreeSet<Root>,
    gamma: BTreeSet<Root>,
    phi: BTreeSet<Root>,
}

impl RootPartition {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn lambda_k(&self) -> &BTreeSet<Root> {
        &self.lambda_k
    }

    pub fn lambda_q0(&self) -> &BTreeSet<Root> {
        &self.lambda_q0
    }

    pub fn lambda_u_minus(&self) -> &BTreeSet<Root> {
        &self.lambda_u_minus
    }

    pub fn gamma(&self) -> &BTreeSet<Root> {
        &self.gamma
    }

    pub fn phi(&self) -> &BTreeSet<Root> {
        &self.phi
    }

    /// True iff Λ(𝔲⁻) is empty, i.e. the cycle has no moduli at the base
    /// point and the minimal-attractiveness bound degenerates to zero.
    pub fn is_convex_degenerate(&self) -> bool {
        self.lambda_u_minus.is_empty()
    }
}
