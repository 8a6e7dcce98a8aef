//! Instance generators. Randomized kinds are deterministic in their seed.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::disks::{Disk, Point};
use crate::exactq::{int, rat, Rat};
use crate::linear::{Equation, LinearSystem};

/// `x = 0, y = 0, z = 0, x + y + z = 1`: every three equations are
/// consistent, all four are not.
pub fn tetrahedron() -> LinearSystem {
    let rows: [([i64; 3], i64); 4] = [
        ([1, 0, 0], 0),
        ([0, 1, 0], 0),
        ([0, 0, 1], 0),
        ([1, 1, 1], 1),
    ];
    LinearSystem::new(
        3,
        rows.iter()
            .map(|(c, r)| Equation::new(c.iter().map(|&v| int(v)).collect(), int(*r)))
            .collect(),
    )
    .expect("three coefficients per row")
}

fn nonzero_row(rng: &mut ChaCha8Rng, k: usize, bound: i64) -> Vec<i64> {
    loop {
        let row: Vec<i64> = (0..k).map(|_| rng.gen_range(-bound..=bound)).collect();
        if k == 0 || row.iter().any(|&v| v != 0) {
            return row;
        }
    }
}

/// `n` nondegenerate equations in `k` unknowns, coefficients and right
/// sides uniform in `[-5, 5]`.
pub fn random_linear(n: usize, k: usize, seed: u64) -> LinearSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eqs = (0..n)
        .map(|_| {
            let row = nonzero_row(&mut rng, k, 5);
            let rhs = rng.gen_range(-5..=5);
            Equation::new(row.into_iter().map(int).collect(), int(rhs))
        })
        .collect();
    LinearSystem::new(k, eqs).expect("rows built with k entries")
}

/// `n` nondegenerate equations all satisfied by a planted integer point,
/// which is returned alongside.
pub fn consistent_linear(n: usize, k: usize, seed: u64) -> (LinearSystem, Vec<Rat>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x0: Vec<i64> = (0..k).map(|_| rng.gen_range(-5..=5)).collect();
    let eqs = (0..n)
        .map(|_| {
            let row = nonzero_row(&mut rng, k, 5);
            let rhs: i64 = row.iter().zip(&x0).map(|(a, x)| a * x).sum();
            Equation::new(row.into_iter().map(int).collect(), int(rhs))
        })
        .collect();
    (
        LinearSystem::new(k, eqs).expect("rows built with k entries"),
        x0.into_iter().map(int).collect(),
    )
}

/// `n` disks with half-integer centers in `[-10, 10]²` and half-integer
/// radii in `[1, 8]`.
pub fn random_disks(n: usize, seed: u64) -> Vec<Disk> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c = Point::new(
                rat(rng.gen_range(-20..=20), 2),
                rat(rng.gen_range(-20..=20), 2),
            );
            Disk::new(c, rat(rng.gen_range(2..=16), 2)).expect("positive radius")
        })
        .collect()
}

/// `n` disks that all contain a planted point, which is returned alongside.
pub fn helly_disks(n: usize, seed: u64) -> (Vec<Disk>, Point) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = Point::new(
        rat(rng.gen_range(-10..=10), 2),
        rat(rng.gen_range(-10..=10), 2),
    );
    let disks = (0..n)
        .map(|_| {
            let c = Point::new(
                rat(rng.gen_range(-20..=20), 2),
                rat(rng.gen_range(-20..=20), 2),
            );
            let r = radius_reaching(&c, &p) + rat(rng.gen_range(0..=4), 2);
            Disk::new(c, r).expect("positive radius")
        })
        .collect();
    (disks, p)
}

/// Smallest positive integer `r` with `r² >= |c - p|²`.
pub(crate) fn radius_reaching(c: &Point, p: &Point) -> Rat {
    let d2 = c.dist2(p);
    let floor: BigInt = d2.ceil().to_integer();
    let mut r = floor.sqrt();
    while Rat::from_integer(&r * &r) < d2 {
        r += 1;
    }
    if r == BigInt::from(0) {
        r = BigInt::from(1);
    }
    Rat::from_integer(r)
}
