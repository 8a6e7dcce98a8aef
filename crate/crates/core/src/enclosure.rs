//! Certified dyadic enclosures for reporting irrational coordinates.
//!
//! Only output paths use these; predicates never consume them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::disks::{QuadNum, QuadPoint};
use crate::exactq::Rat;

pub const DEFAULT_PRECISION: u32 = 53;

fn pow2(p: u32) -> BigInt {
    BigInt::one() << p
}

fn floor_dyadic(x: &Rat, p: u32) -> Rat {
    let scaled = x.numer() * pow2(p);
    Rat::new(scaled.div_floor(x.denom()), pow2(p))
}

fn ceil_dyadic(x: &Rat, p: u32) -> Rat {
    let scaled = x.numer() * pow2(p);
    Rat::new(scaled.div_ceil(x.denom()), pow2(p))
}

/// Closed interval `[lo, hi]`. Endpoints are dyadic except for exact
/// rationals, which are reported as the degenerate interval `[x, x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rat,
    pub hi: Rat,
}

impl Enclosure {
    pub fn exact(x: Rat) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn to_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / Rat::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    fn round_out(&self, p: u32) -> Self {
        Self {
            lo: floor_dyadic(&self.lo, p),
            hi: ceil_dyadic(&self.hi, p),
        }
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Self {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        Self {
            lo: c.iter().min().expect("four products").clone(),
            hi: c.iter().max().expect("four products").clone(),
        }
    }

    fn scale(&self, k: &Rat) -> Self {
        self.mul(&Self::exact(k.clone()))
    }

    /// Requires `o` to exclude zero.
    fn div(&self, o: &Self, p: u32) -> Self {
        assert!(
            o.lo.is_positive() || o.hi.is_negative(),
            "division by an enclosure containing zero"
        );
        let inv = Self {
            lo: Rat::one() / &o.hi,
            hi: Rat::one() / &o.lo,
        };
        self.mul(&inv).round_out(p)
    }

    fn sqrt(&self, p: u32) -> Self {
        Self {
            lo: sqrt_floor(&self.lo, p),
            hi: sqrt_ceil(&self.hi, p),
        }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// `floor(√x · 2^p) / 2^p` for `x >= 0`; negative inputs clamp to zero.
fn sqrt_floor(x: &Rat, p: u32) -> Rat {
    if !x.is_positive() {
        return Rat::zero();
    }
    let scaled = (x.numer() * pow2(2 * p)).div_floor(x.denom());
    Rat::new(scaled.sqrt(), pow2(p))
}

fn sqrt_ceil(x: &Rat, p: u32) -> Rat {
    if !x.is_positive() {
        return Rat::zero();
    }
    let target = x * Rat::from_integer(pow2(2 * p));
    let s = target.floor().to_integer().sqrt();
    let s = if Rat::from_integer(&s * &s) == target {
        s
    } else {
        s + 1
    };
    Rat::new(s, pow2(p))
}

/// Recomputes `f` at increasing working precision until the enclosure is
/// no wider than `2^-prec`.
pub(crate) fn refine(prec: u32, f: impl Fn(u32) -> Enclosure) -> Enclosure {
    let target = Rat::new(BigInt::one(), pow2(prec));
    let mut p = prec + 8;
    loop {
        let e = f(p);
        if e.width() <= target {
            return e;
        }
        p += 32;
    }
}

fn quad_at(q: &QuadNum, p: u32) -> Enclosure {
    if q.is_rational() {
        return Enclosure::exact(q.a.clone());
    }
    let root = Enclosure::exact(q.d.clone()).sqrt(p);
    Enclosure::exact(q.a.clone())
        .add(&root.scale(&q.b))
        .round_out(p)
}

pub fn enclose(q: &QuadNum, prec: u32) -> Enclosure {
    if q.is_rational() {
        return Enclosure::exact(q.a.clone());
    }
    refine(prec, |p| quad_at(q, p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointEnclosure {
    pub x: Enclosure,
    pub y: Enclosure,
}

impl PointEnclosure {
    pub fn of(p: &QuadPoint, prec: u32) -> Self {
        Self {
            x: enclose(&p.x, prec),
            y: enclose(&p.y, prec),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// Enclosures for the closest-pair quantities between a disk centered at
/// `center` with radius `radius` and a point `g` outside it.
///
/// Returns the point of the disk nearest to `g` and the squared gap
/// `(|g - center| - radius)²`.
pub(crate) fn nearest_on_disk(
    center: &crate::disks::Point,
    radius: &Rat,
    g: &QuadPoint,
    prec: u32,
) -> (PointEnclosure, Enclosure) {
    let dist2 = g.dist2_to(center);
    let at = |p: u32| {
        let d2 = quad_at(&dist2, p);
        let dist = d2.sqrt(p);
        let gx = quad_at(&g.x, p);
        let gy = quad_at(&g.y, p);
        let cx = Enclosure::exact(center.x.clone());
        let cy = Enclosure::exact(center.y.clone());
        let r = Enclosure::exact(radius.clone());
        let x = cx
            .add(&gx.sub(&cx).scale(radius).div(&dist, p))
            .round_out(p);
        let y = cy
            .add(&gy.sub(&cy).scale(radius).div(&dist, p))
            .round_out(p);
        let gap = dist.sub(&r);
        let gap2 = gap.mul(&gap).round_out(p);
        (x, y, gap2)
    };
    let x = refine(prec, |p| at(p).0);
    let y = refine(prec, |p| at(p).1);
    let gap2 = refine(prec, |p| at(p).2);
    (PointEnclosure { x, y }, gap2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    #[test]
    fn sqrt_two() {
        let e = enclose(&QuadNum::new(int(0), int(1), int(2)), 53);
        assert!(e.width() <= Rat::new(BigInt::one(), pow2(53)));
        assert!(&e.lo * &e.lo <= int(2) && int(2) <= &e.hi * &e.hi);
        assert!((e.to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rational_is_exact() {
        let e = enclose(&QuadNum::rational(rat(1, 3)), 10);
        assert!(e.is_exact());
        assert_eq!(e.lo, rat(1, 3));
    }

    #[test]
    fn perfect_square_roots_are_exact() {
        assert_eq!(sqrt_floor(&rat(9, 4), 5), rat(3, 2));
        assert_eq!(sqrt_ceil(&rat(9, 4), 5), rat(3, 2));
        assert!(sqrt_ceil(&int(2), 5) > sqrt_floor(&int(2), 5));
    }
}
