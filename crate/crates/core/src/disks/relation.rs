use num_traits::Zero;

use super::quad::QuadPoint;
use super::{Disk, Point};
use crate::exactq::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairRelation {
    Disjoint,
    /// Touching from outside at one point.
    ExternalOsculation {
        point: Point,
    },
    /// Boundary circles cross at two points.
    ProperLens,
    /// One disk inside the other, touching at one point.
    InternalTangency {
        point: Point,
        inner: Which,
    },
    ProperContainment {
        inner: Which,
    },
    Equal,
}

impl PairRelation {
    pub fn meets(&self) -> bool {
        !matches!(self, Self::Disjoint)
    }
}

/// Classifies two closed disks by comparing the squared center distance
/// against `(r1 + r2)²` and `(r1 - r2)²`.
pub fn pair_relation(a: &Disk, b: &Disk) -> PairRelation {
    let d2 = a.center().dist2(b.center());
    let (ra, rb) = (a.radius(), b.radius());
    if d2.is_zero() && ra == rb {
        return PairRelation::Equal;
    }
    let sum = ra + rb;
    let sum2 = &sum * &sum;
    if d2 > sum2 {
        return PairRelation::Disjoint;
    }
    if d2 == sum2 {
        return PairRelation::ExternalOsculation {
            point: lerp(a.center(), b.center(), &(ra / &sum)),
        };
    }
    let diff = ra - rb;
    let diff2 = &diff * &diff;
    if d2 > diff2 {
        return PairRelation::ProperLens;
    }
    let (inner, outer_disk, inner_disk) = if ra < rb {
        (Which::First, b, a)
    } else {
        (Which::Second, a, b)
    };
    if d2 == diff2 {
        let gap = outer_disk.radius() - inner_disk.radius();
        PairRelation::InternalTangency {
            point: lerp(
                outer_disk.center(),
                inner_disk.center(),
                &(outer_disk.radius() / gap),
            ),
            inner,
        }
    } else {
        PairRelation::ProperContainment { inner }
    }
}

fn lerp(p: &Point, q: &Point, t: &Rat) -> Point {
    Point::new(&p.x + t * (&q.x - &p.x), &p.y + t * (&q.y - &p.y))
}

/// The part of circle `∂j` that lies in disk `k`.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub(crate) enum CircleCut {
    Full,
    Nothing,
    Touch(QuadPoint),
    /// Counterclockwise arc of `∂j` from `from` to `to`.
    Arc {
        from: QuadPoint,
        to: QuadPoint,
    },
}

pub(crate) fn circle_cut(j: &Disk, k: &Disk) -> CircleCut {
    match pair_relation(j, k) {
        PairRelation::Equal => CircleCut::Full,
        PairRelation::Disjoint => CircleCut::Nothing,
        PairRelation::ExternalOsculation { point } => CircleCut::Touch(QuadPoint::rational(&point)),
        PairRelation::InternalTangency { point, inner } => match inner {
            Which::First => CircleCut::Full,
            Which::Second => CircleCut::Touch(QuadPoint::rational(&point)),
        },
        PairRelation::ProperContainment { inner } => match inner {
            Which::First => CircleCut::Full,
            Which::Second => CircleCut::Nothing,
        },
        PairRelation::ProperLens => {
            let (minus, plus) = crossing_points(j, k);
            CircleCut::Arc {
                from: minus,
                to: plus,
            }
        }
    }
}

/// The two crossing points of properly intersecting circles, `(right,
/// left)` relative to the directed line from `j`'s center to `k`'s.
///
/// With `v = ck - cj` and `a = (|v|² + rj² - rk²) / (2|v|²)` the points are
/// `cj + a·v ± √t·perp(v)` where `t = rj²/|v|² - a²`.
pub(crate) fn crossing_points(j: &Disk, k: &Disk) -> (QuadPoint, QuadPoint) {
    let (cj, ck) = (j.center(), k.center());
    let vx = &ck.x - &cj.x;
    let vy = &ck.y - &cj.y;
    let v2 = &vx * &vx + &vy * &vy;
    let rj2 = j.radius() * j.radius();
    let rk2 = k.radius() * k.radius();
    let two = Rat::from_integer(2.into());
    let a = (&v2 + &rj2 - &rk2) / (&two * &v2);
    let mid = Point::new(&cj.x + &a * &vx, &cj.y + &a * &vy);
    let t = &rj2 / &v2 - &a * &a;
    let neg_vy = -&vy;
    let one = Rat::from_integer(1.into());
    let minus_one = -&one;
    (
        QuadPoint::along(&mid, (&neg_vy, &vx), &minus_one, &t),
        QuadPoint::along(&mid, (&neg_vy, &vx), &one, &t),
    )
}
