//! Brute-force oracles for cross-checking the production paths.
//!
//! Nothing here calls into `exactq` elimination or the disk predicates:
//! rank is plain Gauss-Jordan over rationals, membership is the textbook
//! inequality. They are slow on purpose and gated to small inputs.

use itertools::Itertools;
use num_traits::Zero;

use crate::disks::{Disk, Point};
use crate::error::{Error, Result};
use crate::exactq::{Rat, RatMatrix};
use crate::linear::LinearSystem;

pub const ORACLE_MAX_EQUATIONS: usize = 14;

/// Rank by Gauss-Jordan elimination directly on rationals.
pub fn naive_rank(m: &RatMatrix) -> usize {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    gauss_jordan_rank(&mut rows, m.cols())
}

fn gauss_jordan_rank(rows: &mut [Vec<Rat>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for v in rows[rank].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[rank].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn naive_consistent(s: &LinearSystem, idx: &[usize]) -> bool {
    let k = s.unknowns();
    let mut coeffs: Vec<Vec<Rat>> = idx
        .iter()
        .map(|&i| s.equations()[i].coeffs.clone())
        .collect();
    let mut augmented: Vec<Vec<Rat>> = idx
        .iter()
        .map(|&i| {
            let e = &s.equations()[i];
            let mut r = e.coeffs.clone();
            r.push(e.rhs.clone());
            r
        })
        .collect();
    gauss_jordan_rank(&mut coeffs, k) == gauss_jordan_rank(&mut augmented, k + 1)
}

/// First inconsistent subset in size-then-lexicographic order, or `None`
/// when the system is consistent.
pub fn exhaustive_min_inconsistent(s: &LinearSystem) -> Result<Option<Vec<usize>>> {
    if s.len() > ORACLE_MAX_EQUATIONS {
        return Err(Error::TooLargeForOracle {
            limit: ORACLE_MAX_EQUATIONS,
            found: s.len(),
        });
    }
    for size in 1..=s.len() {
        for idx in (0..s.len()).combinations(size) {
            if !naive_consistent(s, &idx) {
                return Ok(Some(idx));
            }
        }
    }
    Ok(None)
}

/// Axis-aligned box sampled at `(resolution + 1)²` evenly spaced points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    min: Point,
    max: Point,
    resolution: u32,
}

impl GridSpec {
    pub fn new(min: Point, max: Point, resolution: u32) -> Result<Self> {
        if resolution == 0 || min.x > max.x || min.y > max.y {
            return Err(Error::BadGrid);
        }
        Ok(Self {
            min,
            max,
            resolution,
        })
    }

    fn point(&self, i: u32, j: u32) -> Point {
        let n = Rat::from_integer(self.resolution.into());
        let fx = Rat::from_integer(i.into()) / &n;
        let fy = Rat::from_integer(j.into()) / &n;
        Point::new(
            &self.min.x + fx * (&self.max.x - &self.min.x),
            &self.min.y + fy * (&self.max.y - &self.min.y),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridResult {
    FoundPoint(Point),
    NoneOnGrid,
}

/// Scans the grid row by row for a point inside every disk.
///
/// One-sided: a found point proves the disks meet, `NoneOnGrid` proves
/// nothing.
pub fn grid_meet_oracle(family: &[Disk], grid: &GridSpec) -> GridResult {
    for j in 0..=grid.resolution {
        for i in 0..=grid.resolution {
            let p = grid.point(i, j);
            let inside_all = family.iter().all(|d| {
                let dx = &p.x - &d.center().x;
                let dy = &p.y - &d.center().y;
                &dx * &dx + &dy * &dy <= d.radius() * d.radius()
            });
            if inside_all {
                return GridResult::FoundPoint(p);
            }
        }
    }
    GridResult::NoneOnGrid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::int;
    use crate::generate::tetrahedron;
    use crate::linear::Equation;

    #[test]
    fn rank_examples() {
        assert_eq!(naive_rank(&RatMatrix::identity(3)), 3);
        let t = RatMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 1]]);
        assert_eq!(naive_rank(&t), 4);
        // A (4x2) · B (2x4)
        let prod =
            RatMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 1, 0, -1], &[3, 3, 3, 3], &[0, 3, 6, 9]]);
        assert_eq!(naive_rank(&prod), 2);
    }

    #[test]
    fn minimal_subsets() {
        assert_eq!(
            exhaustive_min_inconsistent(&tetrahedron()).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        let ok = LinearSystem::new(
            2,
            vec![
                Equation::new(vec![int(1), int(1)], int(2)),
                Equation::new(vec![int(1), int(-1)], int(0)),
            ],
        )
        .unwrap();
        assert_eq!(exhaustive_min_inconsistent(&ok).unwrap(), None);

        let mut eqs: Vec<Equation> = (0..5)
            .map(|i| Equation::new(vec![int(1), int(i)], int(i)))
            .collect();
        eqs.push(Equation::new(vec![int(0), int(0)], int(1)));
        let s = LinearSystem::new(2, eqs).unwrap();
        assert_eq!(exhaustive_min_inconsistent(&s).unwrap(), Some(vec![5]));

        let big = LinearSystem::new(1, vec![Equation::new(vec![int(1)], int(0)); 15]).unwrap();
        assert!(exhaustive_min_inconsistent(&big).is_err());
    }

    #[test]
    fn grid_examples() {
        let fam = vec![
            Disk::new(Point::new(int(1), int(0)), int(2)).unwrap(),
            Disk::new(Point::new(int(-1), int(1)), int(2)).unwrap(),
        ];
        let g = GridSpec::new(Point::new(int(-2), int(-2)), Point::new(int(2), int(2)), 4).unwrap();
        assert!(matches!(
            grid_meet_oracle(&fam, &g),
            GridResult::FoundPoint(_)
        ));

        let single = vec![Disk::new(Point::new(int(1), int(1)), int(1)).unwrap()];
        let g = GridSpec::new(Point::new(int(1), int(1)), Point::new(int(3), int(3)), 2).unwrap();
        assert_eq!(
            grid_meet_oracle(&single, &g),
            GridResult::FoundPoint(Point::new(int(1), int(1)))
        );
        assert!(GridSpec::new(Point::new(int(0), int(0)), Point::new(int(1), int(1)), 0).is_err());
    }
}
