//! Numbers of the form `a + b√d` and their exact sign.
//!
//! Circle-circle intersection points live in `Q(√d)` with one radicand per
//! circle pair. Comparing two such points mixes two radicands; [`Bi`]
//! handles `a + b√d1 + c√d2 + e√d1√d2` by treating it as `X + Y√d2` over
//! `Q(√d1)` and reducing to one-radical sign tests.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Disk, Point};
use crate::exactq::Rat;

fn sign(x: &Rat) -> Ordering {
    x.cmp(&Rat::zero())
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rat::new(n, d))
}

/// `a + b√d` with `d >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
}

impl QuadNum {
    /// Normalizes: `d` becomes a square-reduced integer where cheap, perfect
    /// squares fold into `a`, and `b = 0` forces `d = 0`.
    pub fn new(a: Rat, b: Rat, d: Rat) -> Self {
        assert!(!d.is_negative(), "negative radicand");
        if b.is_zero() || d.is_zero() {
            return Self::rational(a);
        }
        if let Some(s) = rational_sqrt(&d) {
            return Self::rational(a + b * s);
        }
        // √(n/m) = √(n·m)/m, then pull small square factors out of n·m.
        let mut rad: BigInt = d.numer() * d.denom();
        let mut coef = Rat::new(BigInt::one(), d.denom().clone());
        let mut p = BigInt::from(2u32);
        let limit = BigInt::from(64u32);
        while p < limit {
            let sq = &p * &p;
            while (&rad % &sq).is_zero() {
                rad /= &sq;
                coef *= Rat::from_integer(p.clone());
            }
            p += 1;
        }
        Self {
            a,
            b: b * coef,
            d: Rat::from_integer(rad),
        }
    }

    pub fn rational(a: Rat) -> Self {
        Self {
            a,
            b: Rat::zero(),
            d: Rat::zero(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() || self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    /// Exact sign.
    pub fn sign(&self) -> Ordering {
        let sa = sign(&self.a);
        let sb = if self.d.is_zero() {
            Ordering::Equal
        } else {
            sign(&self.b)
        };
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            _ => {
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * &self.d;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    fn common_radicand(&self, other: &Self) -> Rat {
        if self.is_rational() {
            other.d.clone()
        } else if other.is_rational() || self.d == other.d {
            self.d.clone()
        } else {
            panic!("mixed radicands in single-extension arithmetic")
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.common_radicand(other);
        Self::new(&self.a + &other.a, &self.b + &other.b, d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let d = self.common_radicand(other);
        Self::new(&self.a - &other.a, &self.b - &other.b, d)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.common_radicand(other);
        Self::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            d,
        )
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(&self.a * k, &self.b * k, self.d.clone())
    }

    pub fn add_rat(&self, k: &Rat) -> Self {
        Self::new(&self.a + k, self.b.clone(), self.d.clone())
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Product with a number from a possibly different extension.
    pub(crate) fn mul_cross(&self, other: &Self) -> Bi {
        Bi {
            a: &self.a * &other.a,
            b: &self.b * &other.a,
            c: &self.a * &other.b,
            e: &self.b * &other.b,
            d1: self.d.clone(),
            d2: other.d.clone(),
        }
    }

    /// `self - other` across extensions.
    pub(crate) fn sub_cross(&self, other: &Self) -> Bi {
        Bi {
            a: &self.a - &other.a,
            b: self.b.clone(),
            c: -&other.b,
            e: Rat::zero(),
            d1: self.d.clone(),
            d2: other.d.clone(),
        }
    }

    /// Exact comparison across extensions.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        self.sub_cross(other).sign()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

/// `a + b√d1 + c√d2 + e√d1√d2`.
#[derive(Debug, Clone)]
pub(crate) struct Bi {
    a: Rat,
    b: Rat,
    c: Rat,
    e: Rat,
    d1: Rat,
    d2: Rat,
}

impl Bi {
    fn combine(&self, other: &Self, negate: bool) -> Self {
        // A side with no √d terms imposes no constraint on d.
        let pick = |mine: &Rat, theirs: &Rat, mine_used: bool, theirs_used: bool| {
            if mine == theirs || !theirs_used {
                mine.clone()
            } else if !mine_used {
                theirs.clone()
            } else {
                panic!("mismatched radicand pair")
            }
        };
        let d1 = pick(
            &self.d1,
            &other.d1,
            !(self.b.is_zero() && self.e.is_zero()),
            !(other.b.is_zero() && other.e.is_zero()),
        );
        let d2 = pick(
            &self.d2,
            &other.d2,
            !(self.c.is_zero() && self.e.is_zero()),
            !(other.c.is_zero() && other.e.is_zero()),
        );
        let op = |x: &Rat, y: &Rat| if negate { x - y } else { x + y };
        Self {
            a: op(&self.a, &other.a),
            b: op(&self.b, &other.b),
            c: op(&self.c, &other.c),
            e: op(&self.e, &other.e),
            d1,
            d2,
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub(crate) fn sign(&self) -> Ordering {
        // X + Y√d2 with X = a + b√d1, Y = c + e√d1
        let x = QuadNum {
            a: self.a.clone(),
            b: self.b.clone(),
            d: self.d1.clone(),
        };
        let y = QuadNum {
            a: self.c.clone(),
            b: self.e.clone(),
            d: self.d1.clone(),
        };
        let sx = x.sign();
        let sy = if self.d2.is_zero() {
            Ordering::Equal
        } else {
            y.sign()
        };
        match (sx, sy) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (p, q) if p == q => p,
            _ => {
                // X² - Y²·d2, still in Q(√d1)
                let x2 = QuadNum {
                    a: &x.a * &x.a + &x.b * &x.b * &x.d,
                    b: Rat::from_integer(2.into()) * &x.a * &x.b,
                    d: x.d.clone(),
                };
                let y2 = QuadNum {
                    a: (&y.a * &y.a + &y.b * &y.b * &y.d) * &self.d2,
                    b: Rat::from_integer(2.into()) * &y.a * &y.b * &self.d2,
                    d: y.d.clone(),
                };
                let z = QuadNum {
                    a: x2.a - y2.a,
                    b: x2.b - y2.b,
                    d: x.d,
                };
                match z.sign() {
                    Ordering::Greater => sx,
                    Ordering::Less => sy,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }
}

/// Point with both coordinates in the same extension `Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadPoint {
    pub x: QuadNum,
    pub y: QuadNum,
}

impl QuadPoint {
    pub fn new(x: QuadNum, y: QuadNum) -> Self {
        if !x.is_rational() && !y.is_rational() {
            assert_eq!(x.d, y.d, "coordinates must share a radicand");
        }
        Self { x, y }
    }

    pub fn rational(p: &Point) -> Self {
        Self {
            x: QuadNum::rational(p.x.clone()),
            y: QuadNum::rational(p.y.clone()),
        }
    }

    /// `base + t·dir·√d`.
    pub(crate) fn along(base: &Point, dir: (&Rat, &Rat), t: &Rat, d: &Rat) -> Self {
        Self::new(
            QuadNum::new(base.x.clone(), dir.0 * t, d.clone()),
            QuadNum::new(base.y.clone(), dir.1 * t, d.clone()),
        )
    }

    pub fn as_rational(&self) -> Option<Point> {
        Some(Point::new(
            self.x.as_rational()?.clone(),
            self.y.as_rational()?.clone(),
        ))
    }

    pub fn radicand(&self) -> Rat {
        if !self.x.is_rational() {
            self.x.d.clone()
        } else {
            self.y.d.clone()
        }
    }

    /// `self - c` as a vector.
    pub fn minus(&self, c: &Point) -> (QuadNum, QuadNum) {
        (self.x.add_rat(&-&c.x), self.y.add_rat(&-&c.y))
    }

    pub fn dist2_to(&self, c: &Point) -> QuadNum {
        let (dx, dy) = self.minus(c);
        dx.square().add(&dy.square())
    }

    /// Closed membership, decided exactly.
    pub fn in_disk(&self, disk: &Disk) -> bool {
        let r2 = disk.radius() * disk.radius();
        self.dist2_to(disk.center()).add_rat(&-r2).sign() != Ordering::Greater
    }

    pub fn eq_exact(&self, other: &Self) -> bool {
        self.x.cmp_exact(&other.x) == Ordering::Equal
            && self.y.cmp_exact(&other.y) == Ordering::Equal
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Display for QuadPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the 2D cross product of vectors from two extensions.
pub(crate) fn cross_sign(u: &(QuadNum, QuadNum), v: &(QuadNum, QuadNum)) -> Ordering {
    u.0.mul_cross(&v.1).sub(&u.1.mul_cross(&v.0)).sign()
}

fn half_plane(v: &(QuadNum, QuadNum)) -> u8 {
    match v.1.sign() {
        Ordering::Greater => 0,
        Ordering::Less => 1,
        Ordering::Equal => {
            if v.0.sign() == Ordering::Greater {
                0
            } else {
                1
            }
        }
    }
}

/// Orders points by polar angle about `center`, measured counterclockwise
/// from the positive x axis in `[0, 2π)`.
pub(crate) fn angle_cmp(center: &Point, p: &QuadPoint, q: &QuadPoint) -> Ordering {
    let u = p.minus(center);
    let v = q.minus(center);
    half_plane(&u)
        .cmp(&half_plane(&v))
        .then_with(|| cross_sign(&u, &v).reverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};
    use proptest::prelude::*;

    fn q(a: i64, b: i64, d: i64) -> QuadNum {
        QuadNum::new(int(a), int(b), int(d))
    }

    #[test]
    fn normalization() {
        assert_eq!(q(1, 2, 9), QuadNum::rational(int(7)));
        let x = QuadNum::new(int(0), int(1), rat(3, 4));
        assert_eq!(x.d, int(3));
        assert_eq!(x.b, rat(1, 2));
        assert_eq!(q(0, 1, 12), QuadNum::new(int(0), int(2), int(3)));
    }

    #[test]
    fn signs() {
        assert_eq!(q(3, -1, 9).sign(), Ordering::Equal);
        assert_eq!(q(1, 1, 2).sign(), Ordering::Greater);
        assert_eq!(q(-2, 1, 3).sign(), Ordering::Less);
        assert_eq!(q(-1, 1, 2).sign(), Ordering::Greater);
        assert_eq!(q(0, -1, 5).sign(), Ordering::Less);
    }

    #[test]
    fn cross_extension_compare() {
        // √2 - √10 < 0, √2 < √3, 1 + √8 = 1 + 2√2
        assert_eq!(q(0, 1, 2).sub_cross(&q(0, 1, 10)).sign(), Ordering::Less);
        assert_eq!(q(0, 1, 2).cmp_exact(&q(0, 1, 3)), Ordering::Less);
        assert_eq!(q(1, 1, 8).cmp_exact(&q(1, 2, 2)), Ordering::Equal);
        // √2·√3 = √6 < 5/2
        let prod = q(0, 1, 2).mul_cross(&q(0, 1, 3));
        let five_halves = Bi {
            a: rat(5, 2),
            b: int(0),
            c: int(0),
            e: int(0),
            d1: int(2),
            d2: int(3),
        };
        assert_eq!(prod.sub(&five_halves).sign(), Ordering::Less);
    }

    proptest! {
        #[test]
        fn sign_matches_float(a in -50i64..50, b in -50i64..50, d in 0i64..60,
                              c in -50i64..50, e in -50i64..50, d2 in 0i64..60) {
            let x = q(a, b, d);
            let fx = a as f64 + b as f64 * (d as f64).sqrt();
            if fx.abs() > 1e-9 {
                prop_assert_eq!(x.sign(), fx.partial_cmp(&0.0).unwrap());
            }
            let y = q(c, e, d2);
            let fy = c as f64 + e as f64 * (d2 as f64).sqrt();
            if (fx - fy).abs() > 1e-9 {
                prop_assert_eq!(x.cmp_exact(&y), fx.partial_cmp(&fy).unwrap());
            }
            let p = x.mul_cross(&y);
            if (fx * fy).abs() > 1e-9 {
                prop_assert_eq!(p.sign(), (fx * fy).partial_cmp(&0.0).unwrap());
            }
        }
    }

    #[test]
    fn angular_order() {
        let c = Point::new(int(0), int(0));
        let pts = [
            QuadPoint::rational(&Point::new(int(1), int(0))),
            QuadPoint::new(q(0, 1, 2), q(0, 1, 2)),
            QuadPoint::rational(&Point::new(int(0), int(1))),
            QuadPoint::rational(&Point::new(int(-1), int(0))),
            QuadPoint::new(q(0, -1, 3), q(0, -1, 3)),
            QuadPoint::rational(&Point::new(int(1), int(-1))),
        ];
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                assert_eq!(angle_cmp(&c, &pts[i], &pts[j]), i.cmp(&j), "{i} {j}");
            }
        }
    }
}
