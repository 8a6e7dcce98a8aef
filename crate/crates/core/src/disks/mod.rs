//! Exact planar disk geometry.
//!
//! Every yes/no answer (meet, tangency, corner-in-disk, angular order) is
//! decided exactly: rational arithmetic in squared form, plus sign tests in
//! at most two quadratic extensions for circle-circle intersection points.
//! Coordinates that need radicals are only ever *reported* as dyadic
//! enclosures; no predicate consumes them.

mod closest;
mod helly;
#[cfg(test)]
mod props;
mod quad;
mod region;
mod relation;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactq::Rat;

pub use closest::{closest_pair, separating_line, ClosestPairResult, GFeature, SeparatingLine};
pub use helly::{minimalist_helly_check, triple_meet, HellyOutcome};
pub use quad::{QuadNum, QuadPoint};
pub use region::{intersect_region, pair_lens, Arc, ArcRegion};
pub use relation::{pair_relation, PairRelation, Which};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Self { x, y }
    }

    pub fn dist2(&self, other: &Point) -> Rat {
        let dx = &other.x - &self.x;
        let dy = &other.y - &self.y;
        &dx * &dx + &dy * &dy
    }
}

/// Closed disk with rational center and strictly positive rational radius.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Disk {
    center: Point,
    radius: Rat,
}

impl Disk {
    pub fn new(center: Point, radius: Rat) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::NonPositiveRadius);
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius(&self) -> &Rat {
        &self.radius
    }

    /// Closed membership of a rational point.
    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist2(p) <= &self.radius * &self.radius
    }

    /// `self ⊆ other`.
    pub fn is_inside(&self, other: &Disk) -> bool {
        let slack = &other.radius - &self.radius;
        !slack.is_negative() && self.center.dist2(&other.center) <= &slack * &slack
    }
}

#[cfg(test)]
pub(crate) mod test_util {
    use super::*;
    use crate::exactq::{int, rat};

    pub fn disk(x: i64, y: i64, r: i64) -> Disk {
        Disk::new(Point::new(int(x), int(y)), int(r)).unwrap()
    }

    pub fn disk_q(x: (i64, i64), y: (i64, i64), r: (i64, i64)) -> Disk {
        Disk::new(Point::new(rat(x.0, x.1), rat(y.0, y.1)), rat(r.0, r.1)).unwrap()
    }
}
