//! Roots of type A (in the gl(n) weight basis) and type C, with exact
//! integer coefficients.
//!
//! A type A_{n−1} root is e_i − e_j (one +1, one −1); a type C_n root is
//! ±e_j ± e_k (j < k) or ±2e_ℓ. Roots are plain coefficient vectors and do
//! not know which system they belong to; validity is always checked against
//! the containing [`RootSystem`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

/// A root written as its integer coefficients against `e_1, …, e_n`.
///
/// The derived ordering is lexicographic on the coefficient vector; this is
/// the canonical order used whenever root sets are enumerated or serialized.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// e_i − e_j in an n-coordinate basis (indices are 1-based, i ≠ j).
    pub fn difference(n: usize, i: usize, j: usize) -> Self {
        debug_assert!(i != j && 1 <= i && i <= n && 1 <= j && j <= n);
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        coeffs[j - 1] = -1;
        Root { coeffs }
    }

    /// e_i + e_j in an n-coordinate basis (1-based; i = j gives 2e_i).
    pub fn symmetric_sum(n: usize, i: usize, j: usize) -> Self {
        debug_assert!(1 <= i && i <= n && 1 <= j && j <= n);
        let mut coeffs = vec![0; n];
        coeffs[i - 1] += 1;
        coeffs[j - 1] += 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of coordinates of the ambient weight basis.
    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient-wise negation; an involution.
    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Coefficient-wise sum. The result need not be a root.
    pub fn plus(&self, other: &Root) -> Root {
        debug_assert_eq!(self.rank(), other.rank());
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Coefficient-wise difference. The result need not be a root.
    pub fn minus(&self, other: &Root) -> Root {
        self.plus(&other.negated())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    /// Sum of all coefficients: 0 on e_i − e_j, ±2 on the type C roots
    /// ±(e_j + e_k) and ±2e_ℓ. Used to split a type C system into its
    /// gl(n) part and the two symmetric blocks.
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({})", self)
    }
}

impl fmt::Display for Root {
    /// Symbolic form, e.g. `e1-e2`, `2e3`, `-e1-e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c > 0 && !first {
                write!(f, "+")?;
            }
            match c {
                1 => write!(f, "e{}", idx + 1)?,
                -1 => write!(f, "-e{}", idx + 1)?,
                _ => write!(f, "{}e{}", c, idx + 1)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The two root system families the crate works with.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// A_{n−1}, realized by the n(n−1) vectors e_i − e_j inside gl(n).
    TypeA,
    /// C_n, the 2n² vectors ±e_j ± e_k (j < k) and ±2e_ℓ.
    TypeC,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum RootError {
    #[error("rank {rank} out of range for {family:?}: need n >= {min}")]
    RankOutOfRange {
        family: Family,
        rank: usize,
        min: usize,
    },
    #[error("root {0} does not belong to the system")]
    ForeignRoot(Root),
}

/// The full set of roots of one family at a fixed rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    roots: BTreeSet<Root>,
}

impl RootSystem {
    /// Enumerates the full root set: n(n−1) roots for `TypeA` (n ≥ 2),
    /// 2n² for `TypeC` (n ≥ 1).
    pub fn build(family: Family, n: usize) -> Result<RootSystem, RootError> {
        let min = match family {
            Family::TypeA => 2,
            Family::TypeC => 1,
        };
        if n < min {
            return Err(RootError::RankOutOfRange {
                family,
                rank: n,
                min,
            });
        }
        let mut roots = BTreeSet::new();
        match family {
            Family::TypeA => {
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            roots.insert(Root::difference(n, i, j));
                        }
                    }
                }
            }
            Family::TypeC => {
                for j in 1..=n {
                    roots.insert(Root::symmetric_sum(n, j, j));
                    roots.insert(Root::symmetric_sum(n, j, j).negated());
                    for k in (j + 1)..=n {
                        roots.insert(Root::difference(n, j, k));
                        roots.insert(Root::difference(n, k, j));
                        roots.insert(Root::symmetric_sum(n, j, k));
                        roots.insert(Root::symmetric_sum(n, j, k).negated());
                    }
                }
            }
        }
        Ok(RootSystem {
            family,
            rank: n,
            roots,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The roots in canonical (lexicographic) order.
    pub fn roots(&self) -> &BTreeSet<Root> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.contains(root)
    }

    /// Root addition: `Some(a + b)` when the coefficient sum is again a
    /// root of the system, `None` otherwise.
    pub fn add(&self, a: &Root, b: &Root) -> Result<Option<Root>, RootError> {
        if !self.contains(a) {
            return Err(RootError::ForeignRoot(a.clone()));
        }
        if !self.contains(b) {
            return Err(RootError::ForeignRoot(b.clone()));
        }
        let sum = a.plus(b);
        Ok(if self.contains(&sum) { Some(sum) } else { None })
    }
}
