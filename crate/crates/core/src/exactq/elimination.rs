//! Bareiss fraction-free elimination.
//!
//! Rows are first scaled to integers (row scaling changes neither rank nor
//! solution set), then eliminated with exact integer division by the
//! previous pivot. Pivot choice is the first nonzero entry in the leftmost
//! unresolved column, so results are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{AffineSolutionSet, Rat, RatMatrix};
use crate::error::{Error, Result};

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of every pivot, in order.
    pivots: Vec<(usize, usize)>,
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect()
}

/// Eliminates below pivots found in columns `0..pivot_cols`; later columns
/// are carried along.
fn bareiss(mut a: Vec<Vec<BigInt>>, pivot_cols: usize) -> Echelon {
    let n = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..pivot_cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, below) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..width {
                let num = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon { rows: a, pivots }
}

/// Exact rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    bareiss(integer_rows(m), m.cols()).pivots.len()
}

/// Solves `m · x = rhs` exactly.
///
/// Returns `Ok(None)` when the system is inconsistent. Otherwise the
/// particular solution has every free variable set to zero and the basis
/// holds one vector per free variable (that variable 1, the other free
/// variables 0), in increasing column order.
pub fn solve_affine(m: &RatMatrix, rhs: &[Rat]) -> Result<Option<AffineSolutionSet>> {
    if rhs.len() != m.rows() {
        return Err(Error::RhsLength {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    let cols = m.cols();
    let ech = bareiss(integer_rows(&m.augment(rhs)), cols);
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }

    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();

    let back_substitute = |x: &mut Vec<Rat>, with_rhs: bool| {
        for &(r, c) in ech.pivots.iter().rev() {
            let row = &ech.rows[r];
            let mut acc = if with_rhs {
                Rat::from_integer(row[cols].clone())
            } else {
                Rat::zero()
            };
            for j in c + 1..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc -= Rat::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[c] = acc / Rat::from_integer(row[c].clone());
        }
    };

    let mut point = vec![Rat::zero(); cols];
    back_substitute(&mut point, true);

    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            back_substitute(&mut v, false);
            v
        })
        .collect();

    Ok(Some(AffineSolutionSet { point, basis }))
}
