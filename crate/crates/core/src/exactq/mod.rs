//! Exact rational arithmetic and fraction-free linear algebra.
//!
//! All consistency decisions in this crate go through [`rank`] and
//! [`solve_affine`]; nothing here ever touches a float.

mod elimination;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use elimination::{rank, solve_affine};

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// `[self | column]`.
    pub fn augment(&self, column: &[Rat]) -> Self {
        assert_eq!(column.len(), self.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(column[i].clone());
                r
            })
            .collect();
        Self::from_rows(self.cols + 1, rows)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

/// Solution set `point + span(basis)` of a consistent linear system.
///
/// Nullspace dimension 0 is a point, 1 a line, 2 a plane, and so on; an
/// empty system yields the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub point: Vec<Rat>,
    pub basis: Vec<Vec<Rat>>,
}

impl AffineSolutionSet {
    pub fn whole_space(k: usize) -> Self {
        Self {
            point: vec![Rat::zero(); k],
            basis: (0..k)
                .map(|i| {
                    let mut v = vec![Rat::zero(); k];
                    v[i] = Rat::one();
                    v
                })
                .collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.point.len()
    }

    /// True if every point of the set satisfies `coeffs · x = rhs`.
    pub fn satisfies(&self, coeffs: &[Rat], rhs: &Rat) -> bool {
        dot(coeffs, &self.point) == *rhs && self.basis.iter().all(|v| dot(coeffs, v).is_zero())
    }

    /// True if `x` lies in the set.
    pub fn contains(&self, x: &[Rat]) -> bool {
        if x.len() != self.point.len() {
            return false;
        }
        let diff: Vec<Rat> = x.iter().zip(&self.point).map(|(a, b)| a - b).collect();
        if self.basis.is_empty() {
            return diff.iter().all(Zero::is_zero);
        }
        let m = RatMatrix::from_rows(self.point.len(), self.basis.clone()).transpose();
        matches!(solve_affine(&m, &diff), Ok(Some(_)))
    }
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}
