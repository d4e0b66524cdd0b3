//! Dense matrices over exact rationals, with fraction-free rank.
//!
//! Just enough linear algebra for the oracle: matrix units, products,
//! commutators, column stacking, and rank over ℚ. Rank clears denominators
//! row by row and then runs Bareiss one-step fraction-free elimination on
//! big integers, so no rounding can occur anywhere.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

pub use num_traits::{One, Zero};

/// Exact rational scalar used throughout the oracle.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Row-major dense matrix over [`Rat`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// The square matrix unit E_{ij} (0-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, Rat::one());
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Rat) {
        let cell = &mut self.data[i * self.cols + j];
        *cell = &*cell + value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Rat {
        debug_assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn scaled(&self, factor: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn plus(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn times(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    /// XY − YX.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.times(other).minus(&other.times(self))
    }

    /// [A | B], side by side.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// The matrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// The matrix flattened into a single row (row-major order).
    pub fn flattened_row(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Rank over ℚ by Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.to_integer_rows();
        let (nr, nc) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..nc {
            if rank == nr {
                break;
            }
            let Some(pivot_row) = (rank..nr).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let pivot = m[rank][col].clone();
            for i in (rank + 1)..nr {
                for j in (col + 1)..nc {
                    let t = &pivot * &m[i][j] - &m[i][col] * &m[rank][j];
                    debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                    m[i][j] = t / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Integer matrix with the same row spans: each row is scaled by the
    /// lcm of its denominators.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut scale = BigInt::one();
                for j in 0..self.cols {
                    scale = scale.lcm(self.get(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let x = self.get(i, j);
                        x.numer() * (&scale / x.denom())
                    })
                    .collect()
            })
            .collect()
    }

    /// Plain Gaussian elimination over ℚ; slower reference route used to
    /// cross-check the fraction-free rank in tests.
    pub fn rank_by_gauss(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot_row) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            let pivot = m[rank][col].clone();
            let (top, rest) = m.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot;
                for (cell, lead) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell = &*cell - &factor * lead;
                }
            }
            rank += 1;
        }
        rank
    }
}
