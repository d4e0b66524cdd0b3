//! Independent verification layer: exact matrix realizations of 𝔰𝔩(n,ℂ) and
//! 𝔰𝔭(2n,ℂ), brackets, isotropy membership by direct matrix action, the
//! linearized boundary variety as a kernel, and nilpotent-exponential probes
//! of the nonlinear boundary variety.
//!
//! Root vectors are realized as integer matrices:
//!
//! * 𝔰𝔩(n): e_{e_i−e_j} = E_{ij};
//! * 𝔰𝔭(2n): e_j−e_k ↦ E_{jk} − E_{n+k,n+j}, e_j+e_k ↦ E_{j,n+k} + E_{k,n+j}
//!   (2e_j ↦ E_{j,n+j}), and the negatives by the transposed patterns.
//!
//! Structure constants come from these concrete realizations, with no
//! Chevalley normalization; every quantity downstream is a rank or a
//! coefficient extracted by exact rational arithmetic.
//!
//! The boundary variety of a functional L supported on Φ is linearized by
//! the Γ × Λ(𝔲⁻) matrix with entries L([e_β, e_γ]); its rank is the
//! codimension of Ŝ_L inside 𝔲⁻.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::concavity::{attractiveness, ConcavityError};
use crate::domains::{
    classify_c, difference_indices, CRoot, DomainError, DomainSpec, RootPartition,
};
use crate::linalg::{rat, Matrix, Rat};
use crate::roots::{Family, Root};

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Concavity(#[from] ConcavityError),
    #[error("matrix size mismatch: {0}x{1} vs {2}x{3}")]
    SizeMismatch(usize, usize, usize, usize),
    #[error("root {0} is not realized in this basis")]
    UnknownRoot(Root),
    #[error("coefficient support must lie inside {set}; offending root {root}")]
    SupportOutside { set: &'static str, root: Root },
    #[error("functional has no nonzero coefficient")]
    ZeroFunctional,
    #[error("phi is empty; no functional can be sampled")]
    EmptyPhi,
    #[error("bracket [e_{0}, e_{1}] does not expand over the basis")]
    ExpansionFailed(Root, Root),
}

/// The matrix realizing one root vector, or `None` if the coefficient
/// pattern is not a root of the family at this rank.
fn root_matrix(family: Family, n: usize, root: &Root) -> Option<Matrix> {
    if root.rank() != n {
        return None;
    }
    match family {
        Family::TypeA => {
            let (i, j) = difference_indices(root)?;
            Some(Matrix::unit(n, i - 1, j - 1))
        }
        Family::TypeC => {
            let dim = 2 * n;
            match classify_c(root)? {
                CRoot::Compact { j, k } => {
                    let mut m = Matrix::unit(dim, j - 1, k - 1);
                    m.set(n + k - 1, n + j - 1, rat(-1));
                    Some(m)
                }
                CRoot::SymPlus { j, k } => {
                    let mut m = Matrix::unit(dim, j - 1, n + k - 1);
                    if j != k {
                        m.set(k - 1, n + j - 1, rat(1));
                    }
                    Some(m)
                }
                CRoot::SymMinus { j, k } => {
                    let mut m = Matrix::unit(dim, n + k - 1, j - 1);
                    if j != k {
                        m.set(n + j - 1, k - 1, rat(1));
                    }
                    Some(m)
                }
            }
        }
    }
}

/// Exact expansion of a matrix over the cartan and the root vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expansion {
    /// The diagonal of the cartan component (length = matrix size).
    pub diagonal: Vec<Rat>,
    /// Nonzero root-space coefficients.
    pub by_root: BTreeMap<Root, Rat>,
}

/// The root vectors e_δ of one realization, plus a cartan basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSpaceBasis {
    family: Family,
    rank: usize,
    dim: usize,
    by_root: BTreeMap<Root, Matrix>,
    /// First nonzero position of each e_δ; distinct roots have disjoint
    /// supports in both realizations, so this slot reads off coefficients.
    pivots: BTreeMap<Root, (usize, usize)>,
    cartan: Vec<Matrix>,
}

/// Realizes every root of the spec's system as a matrix, together with a
/// basis of the diagonal cartan subalgebra.
pub fn build_basis(spec: &DomainSpec) -> Result<RootSpaceBasis, OracleError> {
    let system = spec.root_system()?;
    let family = spec.family();
    let n = spec.rank();
    let dim = match family {
        Family::TypeA => n,
        Family::TypeC => 2 * n,
    };
    let mut by_root = BTreeMap::new();
    let mut pivots = BTreeMap::new();
    for root in system.roots() {
        let m = root_matrix(family, n, root).expect("system roots are realizable");
        let pivot = first_nonzero(&m).expect("root vectors are nonzero");
        by_root.insert(root.clone(), m);
        pivots.insert(root.clone(), pivot);
    }
    let cartan = match family {
        Family::TypeA => (0..n - 1)
            .map(|k| {
                let mut h = Matrix::zeros(dim, dim);
                h.set(k, k, rat(1));
                h.set(k + 1, k + 1, rat(-1));
                h
            })
            .collect(),
        Family::TypeC => (0..n)
            .map(|k| {
                let mut h = Matrix::zeros(dim, dim);
                h.set(k, k, rat(1));
                h.set(n + k, n + k, rat(-1));
                h
            })
            .collect(),
    };
    Ok(RootSpaceBasis {
        family,
        rank: n,
        dim,
        by_root,
        pivots,
        cartan,
    })
}

fn first_nonzero(m: &Matrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

impl RootSpaceBasis {
    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank of the weight basis (n).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Side length of the realization matrices (n or 2n).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cartan(&self) -> &[Matrix] {
        &self.cartan
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.by_root.keys()
    }

    pub fn vector(&self, root: &Root) -> Result<&Matrix, OracleError> {
        self.by_root
            .get(root)
            .ok_or_else(|| OracleError::UnknownRoot(root.clone()))
    }

    /// δ(H): the root's coefficients read against the first n diagonal
    /// entries of the cartan element H.
    pub fn weight_on(&self, root: &Root, h: &Matrix) -> Rat {
        root.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| h.get(i, i) * rat(c))
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    /// The coefficient of e_δ in m, read at the pivot slot. Exact whenever
    /// m lies in the algebra (root supports are pairwise disjoint and the
    /// cartan is diagonal).
    pub fn coefficient_of(&self, root: &Root, m: &Matrix) -> Result<Rat, OracleError> {
        let (i, j) = *self
            .pivots
            .get(root)
            .ok_or_else(|| OracleError::UnknownRoot(root.clone()))?;
        let e = &self.by_root[root];
        Ok(m.get(i, j) / e.get(i, j))
    }

    /// Full expansion of m over cartan ⊕ root spaces; `None` if m is not in
    /// the span (off-diagonal residue, or a diagonal outside the cartan).
    pub fn expand(&self, m: &Matrix) -> Option<Expansion> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return None;
        }
        let mut rest = m.clone();
        let mut by_root = BTreeMap::new();
        for (root, e) in &self.by_root {
            let (i, j) = self.pivots[root];
            let c = rest.get(i, j) / e.get(i, j);
            if !c.is_zero() {
                rest = rest.minus(&e.scaled(&c));
                by_root.insert(root.clone(), c);
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j && !rest.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        let diagonal: Vec<Rat> = (0..self.dim).map(|i| rest.get(i, i).clone()).collect();
        let in_cartan = match self.family {
            Family::TypeA => diagonal
                .iter()
                .fold(Rat::zero(), |acc, x| acc + x)
                .is_zero(),
            Family::TypeC => {
                (0..self.rank).all(|k| (&diagonal[k] + &diagonal[self.rank + k]).is_zero())
            }
        };
        in_cartan.then_some(Expansion { diagonal, by_root })
    }
}

/// XY − YX, exact.
pub fn bracket(x: &Matrix, y: &Matrix) -> Result<Matrix, OracleError> {
    if x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols() {
        return Err(OracleError::SizeMismatch(
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols(),
        ));
    }
    Ok(x.commutator(y))
}

/// Decides δ ∈ Λ(𝔮₀) by direct matrix action: e_δ must map the base-point
/// coordinate subspace into itself. This is the independent counterpart of
/// the closed-form rule in [`DomainSpec::q0_roots`].
pub fn q0_member(delta: &Root, spec: &DomainSpec) -> Result<bool, OracleError> {
    spec.ensure_valid().map_err(OracleError::Domain)?;
    let n = spec.rank();
    let m = root_matrix(spec.family(), n, delta)
        .filter(|_| spec.root_system().expect("validated").contains(delta))
        .ok_or_else(|| OracleError::UnknownRoot(delta.clone()))?;
    let base = spec.base_point()?;
    let cols = base.columns();
    let dim = m.rows();
    let mut selector = Matrix::zeros(dim, cols.len());
    for (jj, &c) in cols.iter().enumerate() {
        selector.set(c, jj, Rat::one());
    }
    let image = m.times(&selector);
    // span(selector) is invariant iff adjoining the image adds no rank
    Ok(selector.hstack(&image).rank() == cols.len())
}

/// A linear functional L = Σ a_α f_α on the coordinate functionals of Φ.
///
/// Coefficients are stored sparsely; the support is validated against the
/// partition by every operation that consumes the functional.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Functional {
    coeffs: BTreeMap<Root, Rat>,
}

impl Functional {
    /// Builds a functional, dropping zero coefficients. Errors when nothing
    /// nonzero remains.
    pub fn new(coeffs: BTreeMap<Root, Rat>) -> Result<Self, OracleError> {
        let coeffs: BTreeMap<Root, Rat> =
            coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if coeffs.is_empty() {
            return Err(OracleError::ZeroFunctional);
        }
        Ok(Functional { coeffs })
    }

    /// The coordinate functional f_α.
    pub fn coordinate(alpha: &Root) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(alpha.clone(), Rat::one());
        Functional { coeffs }
    }

    pub fn support(&self) -> impl Iterator<Item = &Root> {
        self.coeffs.keys()
    }

    pub fn coeff(&self, root: &Root) -> Rat {
        self.coeffs.get(root).cloned().unwrap_or_else(Rat::zero)
    }

    /// L applied to a matrix of the algebra: Σ a_α · (coefficient of e_α).
    pub fn apply(&self, m: &Matrix, basis: &RootSpaceBasis) -> Result<Rat, OracleError> {
        let mut total = Rat::zero();
        for (root, a) in &self.coeffs {
            total += a * &basis.coefficient_of(root, m)?;
        }
        Ok(total)
    }

    fn ensure_supported_on_phi(&self, part: &RootPartition) -> Result<(), OracleError> {
        for root in self.support() {
            if !part.phi().contains(root) {
                return Err(OracleError::SupportOutside {
                    set: "phi",
                    root: root.clone(),
                });
            }
        }
        Ok(())
    }
}

/// The bracket data behind the linearized boundary variety of a partition:
/// for every (γ, β) ∈ Γ × Λ(𝔲⁻), the Φ-coefficients of [e_β, e_γ].
///
/// Building the table costs one bracket per pair; evaluating a functional
/// against it is then pure lookup, which is what makes seeded sweeps with
/// hundreds of functionals per instance cheap.
pub struct LinearizationTable {
    gammas: Vec<Root>,
    betas: Vec<Root>,
    entries: Vec<(usize, usize, Root, Rat)>,
}

impl LinearizationTable {
    pub fn build(part: &RootPartition, basis: &RootSpaceBasis) -> Result<Self, OracleError> {
        let gammas: Vec<Root> = part.gamma().iter().cloned().collect();
        let betas: Vec<Root> = part.lambda_u_minus().iter().cloned().collect();
        let mut entries = Vec::new();
        for (gi, gamma) in gammas.iter().enumerate() {
            let e_gamma = basis.vector(gamma)?;
            for (bi, beta) in betas.iter().enumerate() {
                let e_beta = basis.vector(beta)?;
                let product = e_beta.commutator(e_gamma);
                let expansion = basis
                    .expand(&product)
                    .ok_or_else(|| OracleError::ExpansionFailed(beta.clone(), gamma.clone()))?;
                for (root, coeff) in expansion.by_root {
                    if part.phi().contains(&root) {
                        entries.push((gi, bi, root, coeff));
                    }
                }
            }
        }
        Ok(LinearizationTable {
            gammas,
            betas,
            entries,
        })
    }

    pub fn gammas(&self) -> &[Root] {
        &self.gammas
    }

    pub fn betas(&self) -> &[Root] {
        &self.betas
    }

    /// The Γ × Λ(𝔲⁻) matrix with entries L([e_β, e_γ]).
    pub fn matrix(&self, l: &Functional) -> Matrix {
        let mut m = Matrix::zeros(self.gammas.len(), self.betas.len());
        for (gi, bi, root, coeff) in &self.entries {
            let a = l.coeff(root);
            if !a.is_zero() {
                m.add_to(*gi, *bi, &(&a * coeff));
            }
        }
        m
    }

    /// rank of [`Self::matrix`] = codim of Ŝ_L inside 𝔲⁻.
    pub fn codim(&self, l: &Functional) -> usize {
        self.matrix(l).rank()
    }
}

/// Matrix of the linearized boundary variety: rows Γ, columns Λ(𝔲⁻),
/// entry(γ, β) = L([e_β, e_γ]).
pub fn functional_matrix(
    l: &Functional,
    part: &RootPartition,
    basis: &RootSpaceBasis,
) -> Result<Matrix, OracleError> {
    l.ensure_supported_on_phi(part)?;
    Ok(LinearizationTable::build(part, basis)?.matrix(l))
}

/// Codimension of the linearized boundary variety Ŝ_L inside 𝔲⁻, as the
/// rank of [`functional_matrix`] over ℚ.
pub fn s_hat_codim(
    l: &Functional,
    part: &RootPartition,
    basis: &RootSpaceBasis,
) -> Result<usize, OracleError> {
    Ok(functional_matrix(l, part, basis)?.rank())
}

/// Polynomial in one variable t with exact rational coefficients, ascending
/// powers, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The curve probe t ↦ L(Ad(exp(tξ)) e_γ) as a polynomial: the series
/// Σ_m (tᵐ/m!)·L(ad_ξᵐ e_γ), which terminates because ad_ξ is nilpotent
/// for ξ ∈ 𝔲⁻.
pub fn boundary_polynomial(
    xi: &BTreeMap<Root, Rat>,
    gamma: &Root,
    l: &Functional,
    part: &RootPartition,
    basis: &RootSpaceBasis,
) -> Result<Polynomial, OracleError> {
    for root in xi.keys() {
        if !part.lambda_u_minus().contains(root) {
            return Err(OracleError::SupportOutside {
                set: "lambda_u_minus",
                root: root.clone(),
            });
        }
    }
    if !part.gamma().contains(gamma) {
        return Err(OracleError::SupportOutside {
            set: "gamma",
            root: gamma.clone(),
        });
    }
    l.ensure_supported_on_phi(part)?;

    let mut xi_matrix = Matrix::zeros(basis.dim(), basis.dim());
    for (root, c) in xi {
        if !c.is_zero() {
            xi_matrix = xi_matrix.plus(&basis.vector(root)?.scaled(c));
        }
    }

    // ad_ξ^m e_γ involves left/right products of ξ-powers totaling m, so it
    // dies once m reaches twice the matrix size
    let cap = 2 * basis.dim() + 1;
    let mut coeffs = Vec::new();
    let mut term = basis.vector(gamma)?.clone();
    let mut factorial = Rat::one();
    for m in 0..=cap {
        if term.is_zero() {
            break;
        }
        if m > 0 {
            factorial *= rat(m as i64);
        }
        coeffs.push(l.apply(&term, basis)? / &factorial);
        term = xi_matrix.commutator(&term);
    }
    debug_assert!(term.is_zero(), "ad_xi must be nilpotent");
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Checks that R_α = span{e_β : β ∈ At(α)} meets ker(functional_matrix(f_α))
/// only at 0 and has dimension |At(α)|, so that R_α ⊕ Ŝ_{L_α} = 𝔲⁻.
pub fn transversality_check(
    alpha: &Root,
    part: &RootPartition,
    basis: &RootSpaceBasis,
) -> Result<bool, OracleError> {
    let at = attractiveness(alpha, part)?;
    if at.size() == 0 {
        return Ok(true);
    }

    // the e_β must be linearly independent as matrices
    let mut flat = Matrix::zeros(at.size(), basis.dim() * basis.dim());
    for (row, beta) in at.betas().enumerate() {
        for (col, value) in basis.vector(beta)?.flattened_row().into_iter().enumerate() {
            flat.set(row, col, value);
        }
    }
    if flat.rank() != at.size() {
        return Ok(false);
    }

    // trivial intersection with the kernel: the columns of the functional
    // matrix indexed by At(α) must be independent
    let table = LinearizationTable::build(part, basis)?;
    let functional = Functional::coordinate(alpha);
    let matrix = table.matrix(&functional);
    let positions: Vec<usize> = at
        .betas()
        .map(|beta| {
            table
                .betas()
                .iter()
                .position(|b| b == beta)
                .expect("At(alpha) is a subset of lambda_u_minus")
        })
        .collect();
    Ok(matrix.select_columns(&positions).rank() == at.size())
}

/// Deterministic seeded functional: integer coefficients drawn uniformly
/// from [−9, 9] over Φ, resampled until not identically zero.
pub fn random_functional(seed: u64, part: &RootPartition) -> Result<Functional, OracleError> {
    if part.phi().is_empty() {
        return Err(OracleError::EmptyPhi);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut coeffs = BTreeMap::new();
        let mut any_nonzero = false;
        for alpha in part.phi() {
            let c = draw_in_range(&mut rng);
            if c != 0 {
                any_nonzero = true;
                coeffs.insert(alpha.clone(), rat(c));
            }
        }
        if any_nonzero {
            return Ok(Functional { coeffs });
        }
    }
}

/// Uniform draw from [−9, 9] by rejection below the largest multiple of 19.
fn draw_in_range(rng: &mut ChaCha8Rng) -> i64 {
    const BOUND: u32 = (u32::MAX / 19) * 19;
    loop {
        let x = rng.next_u32();
        if x < BOUND {
            return (x % 19) as i64 - 9;
        }
    }
}
