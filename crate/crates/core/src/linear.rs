//! Helly certification for overdetermined linear systems.
//!
//! A nondegenerate system in `k` unknowns is consistent as soon as every
//! subsystem of `k + 1` equations is. [`helly_certify`] decides consistency
//! directly by exact rank and uses that bound only to limit the search for
//! a small inconsistent subsystem.

use itertools::Itertools;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactq::{solve_affine, AffineSolutionSet, Rat, RatMatrix};
use crate::par;

/// Name of the generator behind [`sample_consistency`].
pub const SAMPLING_RNG: &str = "ChaCha8";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl Equation {
    pub fn new(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Self { coeffs, rhs }
    }

    pub fn classify(&self) -> EquationClass {
        classify(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationClass {
    NondegenerateConsistent,
    DegenerateConsistent,
    DegenerateInconsistent,
}

pub fn classify(e: &Equation) -> EquationClass {
    if e.coeffs.iter().any(|c| !c.is_zero()) {
        EquationClass::NondegenerateConsistent
    } else if e.rhs.is_zero() {
        EquationClass::DegenerateConsistent
    } else {
        EquationClass::DegenerateInconsistent
    }
}

/// `N` equations in `k` unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    unknowns: usize,
    equations: Vec<Equation>,
}

impl LinearSystem {
    pub fn new(unknowns: usize, equations: Vec<Equation>) -> Result<Self> {
        for (index, e) in equations.iter().enumerate() {
            if e.coeffs.len() != unknowns {
                return Err(Error::ArityMismatch {
                    index,
                    expected: unknowns,
                    found: e.coeffs.len(),
                });
            }
        }
        Ok(Self {
            unknowns,
            equations,
        })
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    fn solve_rows(&self, idx: &[usize]) -> Option<AffineSolutionSet> {
        let m = RatMatrix::from_rows(
            self.unknowns,
            idx.iter()
                .map(|&i| self.equations[i].coeffs.clone())
                .collect(),
        );
        let rhs: Vec<Rat> = idx.iter().map(|&i| self.equations[i].rhs.clone()).collect();
        solve_affine(&m, &rhs).expect("rhs built from the same rows")
    }

    fn is_consistent(&self, idx: &[usize]) -> bool {
        self.solve_rows(idx).is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsystemVerdict {
    Consistent(AffineSolutionSet),
    Inconsistent,
}

impl SubsystemVerdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Self::Consistent(_))
    }
}

/// Exact verdict for the rows in `idx` (treated as a set).
pub fn check_subsystem(s: &LinearSystem, idx: &[usize]) -> Result<SubsystemVerdict> {
    let mut rows = idx.to_vec();
    rows.sort_unstable();
    rows.dedup();
    if let Some(&index) = rows.iter().find(|&&i| i >= s.len()) {
        return Err(Error::IndexOutOfRange {
            index,
            len: s.len(),
        });
    }
    Ok(match s.solve_rows(&rows) {
        Some(w) => SubsystemVerdict::Consistent(w),
        None => SubsystemVerdict::Inconsistent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsystemScan {
    AllConsistent,
    FirstViolation(Vec<usize>),
}

/// Checks every `m`-subset, in lexicographic order.
pub fn all_subsystems_consistent(s: &LinearSystem, m: usize) -> Result<SubsystemScan> {
    if m > s.len() {
        return Err(Error::SubsetTooLarge {
            size: m,
            len: s.len(),
        });
    }
    let subsets: Vec<Vec<usize>> = (0..s.len()).combinations(m).collect();
    Ok(
        match par::position_first(&subsets, |idx| !s.is_consistent(idx)) {
            Some(i) => SubsystemScan::FirstViolation(subsets[i].clone()),
            None => SubsystemScan::AllConsistent,
        },
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HellyCertificate {
    /// Solution set of the whole system.
    Consistent { witness: AffineSolutionSet },
    /// Indices of an inconsistent subsystem with at most `k + 1` rows.
    Inconsistent { subsystem: Vec<usize> },
}

impl HellyCertificate {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Self::Consistent { .. })
    }

    /// Re-checks the certificate against `s` from scratch.
    pub fn verify(&self, s: &LinearSystem) -> bool {
        match self {
            Self::Consistent { witness } => {
                witness.ambient_dimension() == s.unknowns()
                    && s.equations()
                        .iter()
                        .all(|e| witness.satisfies(&e.coeffs, &e.rhs))
            }
            Self::Inconsistent { subsystem } => {
                subsystem.len() <= s.unknowns() + 1
                    && matches!(
                        check_subsystem(s, subsystem),
                        Ok(SubsystemVerdict::Inconsistent)
                    )
            }
        }
    }
}

/// Decides consistency of `s` and returns a certificate.
///
/// An inconsistent degenerate row `0 = c` is its own certificate; rows
/// `0 = 0` are ignored. Inconsistent certificates have minimum cardinality
/// and are lexicographically first among those.
///
/// # Panics
///
/// If an inconsistent nondegenerate system had no inconsistent subsystem of
/// size at most `k + 1`. That would contradict Helly's theorem.
pub fn helly_certify(s: &LinearSystem) -> HellyCertificate {
    let mut active = Vec::with_capacity(s.len());
    for (i, e) in s.equations().iter().enumerate() {
        match classify(e) {
            EquationClass::DegenerateInconsistent => {
                return HellyCertificate::Inconsistent { subsystem: vec![i] }
            }
            EquationClass::DegenerateConsistent => {}
            EquationClass::NondegenerateConsistent => active.push(i),
        }
    }

    if let Some(witness) = s.solve_rows(&active) {
        return HellyCertificate::Consistent { witness };
    }

    let bound = (s.unknowns() + 1).min(active.len());
    for size in 2..=bound {
        let subsets: Vec<Vec<usize>> = active.iter().copied().combinations(size).collect();
        if let Some(i) = par::position_first(&subsets, |idx| !s.is_consistent(idx)) {
            return HellyCertificate::Inconsistent {
                subsystem: subsets[i].clone(),
            };
        }
    }
    panic!(
        "Helly bound violated: inconsistent nondegenerate system in {} unknowns \
         has no inconsistent subsystem of size <= {}",
        s.unknowns(),
        s.unknowns() + 1
    );
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplingReport {
    pub samples_drawn: usize,
    pub subsystem_size: usize,
    pub inconsistent_samples: usize,
    pub first_hit: Option<Vec<usize>>,
    pub rng: &'static str,
    pub seed: u64,
}

/// Tests `trials` uniformly random `m`-subsets for consistency.
pub fn sample_consistency(
    s: &LinearSystem,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<SamplingReport> {
    if m > s.len() {
        return Err(Error::SubsetTooLarge {
            size: m,
            len: s.len(),
        });
    }
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SamplingReport {
        samples_drawn: 0,
        subsystem_size: m,
        inconsistent_samples: 0,
        first_hit: None,
        rng: SAMPLING_RNG,
        seed,
    };
    for _ in 0..trials {
        let mut idx = rand::seq::index::sample(&mut rng, s.len(), m).into_vec();
        idx.sort_unstable();
        report.samples_drawn += 1;
        if !s.is_consistent(&idx) {
            report.inconsistent_samples += 1;
            report.first_hit.get_or_insert(idx);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::int;
    use crate::generate::tetrahedron;

    fn eq(c: &[i64], r: i64) -> Equation {
        Equation::new(c.iter().map(|&v| int(v)).collect(), int(r))
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(&eq(&[0, 0, 0], 1)),
            EquationClass::DegenerateInconsistent
        );
        assert_eq!(
            classify(&eq(&[0, 0, 0], 0)),
            EquationClass::DegenerateConsistent
        );
        assert_eq!(
            classify(&eq(&[1, 1, 1], 1)),
            EquationClass::NondegenerateConsistent
        );
    }

    #[test]
    fn arity_is_enforced() {
        let err = LinearSystem::new(3, vec![eq(&[1, 0, 0], 0), eq(&[1, 0], 0)]).unwrap_err();
        assert_eq!(
            err,
            Error::ArityMismatch {
                index: 1,
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn tetrahedral_subsystems() {
        let t = tetrahedron();
        match check_subsystem(&t, &[0, 1, 2]).unwrap() {
            SubsystemVerdict::Consistent(w) => {
                assert_eq!(w.point, vec![int(0), int(0), int(0)]);
                assert_eq!(w.dimension(), 0);
            }
            v => panic!("{v:?}"),
        }
        assert_eq!(
            check_subsystem(&t, &[0, 1, 2, 3]).unwrap(),
            SubsystemVerdict::Inconsistent
        );
        assert_eq!(
            check_subsystem(&t, &[]).unwrap(),
            SubsystemVerdict::Consistent(AffineSolutionSet::whole_space(3))
        );
        assert_eq!(
            check_subsystem(&t, &[4]).unwrap_err(),
            Error::IndexOutOfRange { index: 4, len: 4 }
        );
    }

    #[test]
    fn exhaustive_scan() {
        let t = tetrahedron();
        assert_eq!(
            all_subsystems_consistent(&t, 3).unwrap(),
            SubsystemScan::AllConsistent
        );
        assert_eq!(
            all_subsystems_consistent(&t, 4).unwrap(),
            SubsystemScan::FirstViolation(vec![0, 1, 2, 3])
        );
        let copies = LinearSystem::new(1, vec![eq(&[1], 0); 6]).unwrap();
        assert_eq!(
            all_subsystems_consistent(&copies, 2).unwrap(),
            SubsystemScan::AllConsistent
        );
        assert!(all_subsystems_consistent(&t, 5).is_err());
    }

    #[test]
    fn certify_tetrahedron_needs_all_four() {
        let t = tetrahedron();
        let cert = helly_certify(&t);
        assert_eq!(
            cert,
            HellyCertificate::Inconsistent {
                subsystem: vec![0, 1, 2, 3]
            }
        );
        assert!(cert.verify(&t));
    }

    #[test]
    fn degenerate_short_circuit() {
        let s = LinearSystem::new(2, vec![eq(&[0, 0], 1), eq(&[1, 1], 0)]).unwrap();
        assert_eq!(
            helly_certify(&s),
            HellyCertificate::Inconsistent { subsystem: vec![0] }
        );
        // 0 = 0 rows never enter a certificate
        let s =
            LinearSystem::new(1, vec![eq(&[0], 0), eq(&[1], 0), eq(&[0], 0), eq(&[2], 1)]).unwrap();
        assert_eq!(
            helly_certify(&s),
            HellyCertificate::Inconsistent {
                subsystem: vec![1, 3]
            }
        );
    }

    #[test]
    fn planted_solution_is_found() {
        // a . (1,2,3) = b by construction
        let mut eqs = Vec::new();
        for i in 0..100i64 {
            let a = [(i % 7) - 3, (i * 5 % 11) - 5, (i * 3 % 5) - 2];
            let a = if a == [0, 0, 0] { [1, 0, 0] } else { a };
            eqs.push(eq(&a, a[0] + 2 * a[1] + 3 * a[2]));
        }
        let s = LinearSystem::new(3, eqs).unwrap();
        let cert = helly_certify(&s);
        match &cert {
            HellyCertificate::Consistent { witness } => {
                assert!(witness.contains(&[int(1), int(2), int(3)]));
            }
            c => panic!("{c:?}"),
        }
        assert!(cert.verify(&s));
    }

    #[test]
    fn sampling_tetrahedron() {
        let t = tetrahedron();
        let r = sample_consistency(&t, 3, 1000, 42).unwrap();
        assert_eq!(r.samples_drawn, 1000);
        assert_eq!(r.inconsistent_samples, 0);
        assert_eq!(r.first_hit, None);

        let r = sample_consistency(&t, 4, 1, 9).unwrap();
        assert_eq!(r.inconsistent_samples, 1);
        assert_eq!(r.first_hit, Some(vec![0, 1, 2, 3]));

        assert_eq!(
            sample_consistency(&t, 3, 50, 7).unwrap(),
            sample_consistency(&t, 3, 50, 7).unwrap()
        );
        assert!(sample_consistency(&t, 5, 1, 0).is_err());
        assert_eq!(sample_consistency(&t, 3, 0, 0), Err(Error::NoTrials));
    }
}
