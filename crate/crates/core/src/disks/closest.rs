//! Closest point-pair between a disk `T` and a disjoint arc region `G`, and
//! the line through the `G`-side point perpendicular to the connecting
//! segment.
//!
//! `G` is convex, so the point of `G` nearest to `T`'s center is unique and
//! lies on the boundary: either inside an arc, where it is the foot of the
//! carrying circle toward that center, or at a corner. Both kinds of
//! candidate are enumerated analytically and compared exactly.

use std::cmp::Ordering;

use num_traits::One;

use super::quad::{angle_cmp, QuadNum, QuadPoint};
use super::region::{Arc, ArcRegion};
use super::{Disk, Point};
use crate::enclosure::{nearest_on_disk, Enclosure, PointEnclosure};
use crate::error::{Error, Result};
use crate::exactq::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GFeature {
    /// Interior of arc `arc`.
    ArcInterior { arc: usize },
    /// Corner `corner`, the start of arc `corner`.
    Corner { corner: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosestPairResult {
    pub on_t: PointEnclosure,
    /// Exact nearest point of `G`.
    pub on_g: QuadPoint,
    pub squared_distance: Enclosure,
    pub g_feature: GFeature,
}

/// Point of circle `circle` nearest to `c`, for `c` off the center.
fn foot(circle: &Disk, c: &Point) -> QuadPoint {
    let o = circle.center();
    let e = o.dist2(c);
    let dir = (&c.x - &o.x, &c.y - &o.y);
    QuadPoint::along(o, (&dir.0, &dir.1), &(circle.radius() / &e), &e)
}

fn strictly_inside_arc(arc: &Arc, p: &QuadPoint) -> bool {
    let o = arc.circle.center();
    let from_start = angle_cmp(o, p, &arc.start);
    let to_end = angle_cmp(o, p, &arc.end);
    if from_start == Ordering::Equal || to_end == Ordering::Equal {
        return false;
    }
    if angle_cmp(o, &arc.start, &arc.end) == Ordering::Less {
        from_start == Ordering::Greater && to_end == Ordering::Less
    } else {
        from_start == Ordering::Greater || to_end == Ordering::Less
    }
}

/// Nearest point of `g` to `c`, which must lie outside `g`.
fn nearest_point(c: &Point, g: &ArcRegion) -> (QuadPoint, GFeature) {
    match g {
        ArcRegion::Empty => unreachable!("checked by caller"),
        ArcRegion::SinglePoint { point } => (point.clone(), GFeature::Corner { corner: 0 }),
        ArcRegion::FullDisk { circle, .. } => (foot(circle, c), GFeature::ArcInterior { arc: 0 }),
        ArcRegion::Region { arcs } => {
            let mut best: Option<(QuadPoint, GFeature, QuadNum)> = None;
            let mut consider = |p: QuadPoint, f: GFeature| {
                let d2 = p.dist2_to(c);
                if best
                    .as_ref()
                    .is_none_or(|(_, _, b)| d2.cmp_exact(b) == Ordering::Less)
                {
                    best = Some((p, f, d2));
                }
            };
            for (i, arc) in arcs.iter().enumerate() {
                let r = arc.circle.radius();
                if arc.circle.center().dist2(c) > r * r {
                    let f = foot(&arc.circle, c);
                    if strictly_inside_arc(arc, &f) {
                        consider(f, GFeature::ArcInterior { arc: i });
                    }
                }
            }
            for (i, arc) in arcs.iter().enumerate() {
                consider(arc.start.clone(), GFeature::Corner { corner: i });
            }
            let (p, f, _) = best.expect("a region has corners");
            (p, f)
        }
    }
}

fn locate(t: &Disk, g: &ArcRegion) -> Result<(QuadPoint, GFeature)> {
    if g.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let c = t.center();
    if g.contains_point(c) {
        return Err(Error::NotDisjoint);
    }
    let (on_g, feature) = nearest_point(c, g);
    let r2 = t.radius() * t.radius();
    if on_g.dist2_to(c).add_rat(&-r2).sign() != Ordering::Greater {
        return Err(Error::NotDisjoint);
    }
    Ok((on_g, feature))
}

/// Closest pair between disk `t` and region `g`, with radical coordinates
/// enclosed to width `2^-precision`.
pub fn closest_pair(t: &Disk, g: &ArcRegion, precision: u32) -> Result<ClosestPairResult> {
    let (on_g, g_feature) = locate(t, g)?;
    let (on_t, squared_distance) = nearest_on_disk(t.center(), t.radius(), &on_g, precision);
    Ok(ClosestPairResult {
        on_t,
        on_g,
        squared_distance,
        g_feature,
    })
}

/// Line through `point` with normal `normal`, oriented from `G` toward `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingLine {
    pub point: QuadPoint,
    pub normal: (QuadNum, QuadNum),
    pub feature: GFeature,
    /// Family indices of the disks the argument rules out: the carrier of
    /// the nearest arc, or the two carriers meeting at the nearest corner.
    pub separated: Vec<usize>,
}

impl SeparatingLine {
    /// `normal · (c - point)` for a rational `c`, in the line's extension.
    fn offset(&self, c: &Point) -> QuadNum {
        let (dx, dy) = self.point.minus(c);
        self.normal
            .0
            .mul(&dx)
            .add(&self.normal.1.mul(&dy))
            .scale(&-Rat::one())
    }

    fn normal_len2(&self) -> QuadNum {
        self.normal.0.square().add(&self.normal.1.square())
    }

    /// Sign of `normal · (p - point)`: `Less` on the `G` side.
    pub fn side(&self, p: &QuadPoint) -> Ordering {
        let one = QuadNum::rational(Rat::one());
        let np = self
            .normal
            .0
            .mul_cross(&p.x)
            .add(&self.normal.1.mul_cross(&p.y));
        let n_point = self
            .normal
            .0
            .mul(&self.point.x)
            .add(&self.normal.1.mul(&self.point.y));
        np.sub(&n_point.mul_cross(&one)).sign()
    }

    /// Every point of `disk` is strictly on the `T` side.
    pub fn disk_strictly_on_t_side(&self, disk: &Disk) -> bool {
        let s = self.offset(disk.center());
        let r2 = disk.radius() * disk.radius();
        s.sign() == Ordering::Greater
            && s.square().sub(&self.normal_len2().scale(&r2)).sign() == Ordering::Greater
    }

    /// Every point of `disk` is on the closed `G` side.
    pub fn disk_on_g_side(&self, disk: &Disk) -> bool {
        let s = self.offset(disk.center());
        let r2 = disk.radius() * disk.radius();
        s.sign() != Ordering::Greater
            && s.square().sub(&self.normal_len2().scale(&r2)).sign() != Ordering::Less
    }
}

pub fn separating_line(t: &Disk, g: &ArcRegion) -> Result<SeparatingLine> {
    let (point, feature) = locate(t, g)?;
    let (gx, gy) = point.minus(t.center());
    let minus_one = -Rat::one();
    let normal = (gx.scale(&minus_one), gy.scale(&minus_one));
    let mut separated = match (g, feature) {
        (ArcRegion::FullDisk { disk, .. }, _) => vec![*disk],
        (ArcRegion::Region { arcs }, GFeature::ArcInterior { arc }) => vec![arcs[arc].disk],
        (ArcRegion::Region { arcs }, GFeature::Corner { corner }) => {
            let before = (corner + arcs.len() - 1) % arcs.len();
            vec![arcs[before].disk, arcs[corner].disk]
        }
        _ => Vec::new(),
    };
    separated.sort_unstable();
    separated.dedup();
    debug_assert!(!normal.0.is_zero() || !normal.1.is_zero());
    Ok(SeparatingLine {
        point,
        normal,
        feature,
        separated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disks::region::{intersect_region, pair_lens};
    use crate::disks::test_util::{disk, disk_q};
    use crate::disks::{pair_relation, triple_meet, PairRelation};
    use crate::exactq::{int, rat};

    fn corner_lens() -> ArcRegion {
        pair_lens(
            &disk_q((0, 1), (-1, 1), (3, 2)),
            &disk_q((0, 1), (1, 1), (3, 2)),
        )
    }

    #[test]
    fn collinear_full_disk() {
        let g = ArcRegion::FullDisk {
            disk: 0,
            circle: disk(0, 0, 1),
        };
        let t = disk(4, 0, 1);
        let cp = closest_pair(&t, &g, 53).unwrap();
        assert_eq!(cp.on_g, QuadPoint::rational(&Point::new(int(1), int(0))));
        assert!(cp.on_t.x.is_exact() && cp.on_t.x.lo == int(3));
        assert!(cp.on_t.y.is_exact() && cp.on_t.y.lo == int(0));
        assert_eq!(cp.squared_distance, Enclosure::exact(int(4)));
        assert_eq!(cp.g_feature, GFeature::ArcInterior { arc: 0 });

        let line = separating_line(&t, &g).unwrap();
        assert_eq!(line.point, cp.on_g);
        assert_eq!(line.normal.0.as_rational(), Some(&int(3)));
        assert_eq!(line.normal.1.as_rational(), Some(&int(0)));
        assert_eq!(line.separated, vec![0]);
        assert!(line.disk_on_g_side(&disk(0, 0, 1)));
        assert!(line.disk_strictly_on_t_side(&t));
    }

    #[test]
    fn corner_is_closest() {
        let g = corner_lens();
        assert_eq!(g.arcs().len(), 2);
        let t = disk(4, 0, 1);
        let cp = closest_pair(&t, &g, 53).unwrap();
        let GFeature::Corner { corner } = cp.g_feature else {
            panic!("{:?}", cp.g_feature)
        };
        // (√5/2, 0)
        let want = QuadPoint::new(
            QuadNum::new(int(0), rat(1, 2), int(5)),
            QuadNum::rational(int(0)),
        );
        assert!(g.corners()[corner].eq_exact(&want));
        assert!(cp.on_g.eq_exact(&want));
        let gap = 4.0 - 5f64.sqrt() / 2.0 - 1.0;
        assert!((cp.squared_distance.to_f64() - gap * gap).abs() < 1e-12);

        let line = separating_line(&t, &g).unwrap();
        assert_eq!(line.separated, vec![0, 1]);
        // both lens disks miss T here, and so does their intersection
        for &i in &line.separated {
            let d = &g.arcs().iter().find(|a| a.disk == i).unwrap().circle;
            assert_eq!(pair_relation(&t, d), PairRelation::Disjoint);
        }
        assert!(!triple_meet(&t, &g.arcs()[0].circle, &g.arcs()[1].circle));
        assert!(line.disk_strictly_on_t_side(&t));
        for c in g.corners() {
            assert_ne!(line.side(&c), Ordering::Greater);
        }
    }

    #[test]
    fn upper_arc_interior_is_closest() {
        let g = corner_lens();
        let t = disk(0, 4, 1);
        let cp = closest_pair(&t, &g, 53).unwrap();
        let GFeature::ArcInterior { arc } = cp.g_feature else {
            panic!("{:?}", cp.g_feature)
        };
        // the upper arc belongs to the lower disk
        assert_eq!(g.arcs()[arc].disk, 0);
        assert_eq!(cp.on_g, QuadPoint::rational(&Point::new(int(0), rat(1, 2))));
        assert_eq!(cp.squared_distance, Enclosure::exact(rat(25, 4)));
        let line = separating_line(&t, &g).unwrap();
        assert_eq!(line.separated, vec![0]);
        assert!(line.disk_on_g_side(&g.arcs()[arc].circle));
    }

    #[test]
    fn precondition_violations() {
        let g = corner_lens();
        assert_eq!(
            closest_pair(&disk(0, 0, 1), &g, 53),
            Err(Error::NotDisjoint)
        );
        assert_eq!(
            closest_pair(&disk(2, 0, 1), &g, 53),
            Err(Error::NotDisjoint)
        );
        assert_eq!(
            closest_pair(&disk(2, 0, 1), &ArcRegion::Empty, 53),
            Err(Error::EmptyRegion)
        );
        assert!(separating_line(&disk(0, 1, 1), &g).is_err());
    }

    #[test]
    fn single_point_region() {
        let g = intersect_region(&[disk(0, 0, 1), disk(2, 0, 1)]).unwrap();
        let t = disk(1, 5, 2);
        let cp = closest_pair(&t, &g, 53).unwrap();
        assert_eq!(cp.g_feature, GFeature::Corner { corner: 0 });
        assert_eq!(cp.squared_distance, Enclosure::exact(int(9)));
        assert!(separating_line(&t, &g).unwrap().separated.is_empty());
    }
}
