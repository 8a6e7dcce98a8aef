use std::cmp::Ordering;

use proptest::prelude::*;

use super::quad::{QuadNum, QuadPoint};
use super::region::{intersect_region, ArcRegion};
use super::test_util::disk_q;
use super::Disk;
use crate::exactq::int;

/// Exact sign of `|m - c|² - r²` for the midpoint `m` of `p` and `q`.
fn midpoint_power(p: &QuadPoint, q: &QuadPoint, d: &Disk) -> Ordering {
    let one = QuadNum::rational(int(1));
    let (ux, uy) = p.minus(d.center());
    let (vx, vy) = q.minus(d.center());
    let uu = ux.square().add(&uy.square()).mul_cross(&one);
    let vv = one.mul_cross(&vx.square().add(&vy.square()));
    let uv = ux.mul_cross(&vx).add(&uy.mul_cross(&vy));
    let four_r2 = QuadNum::rational(int(4) * d.radius() * d.radius()).mul_cross(&one);
    uu.add(&vv).add(&uv).add(&uv).sub(&four_r2).sign()
}

fn family() -> impl Strategy<Value = Vec<Disk>> {
    let on_grid =
        (-4i64..=4, -4i64..=4, 1i64..=5).prop_map(|(x, y, r)| disk_q((x, 1), (y, 1), (r, 1)));
    let fine =
        (-12i64..=12, -12i64..=12, 3i64..=15).prop_map(|(x, y, r)| disk_q((x, 3), (y, 3), (r, 3)));
    prop_oneof![
        prop::collection::vec(on_grid, 2..=6),
        prop::collection::vec(fine, 2..=6),
    ]
}

fn same_points(a: &[QuadPoint], b: &[QuadPoint]) -> bool {
    a.len() == b.len()
        && a.iter().all(|p| b.iter().any(|q| q.eq_exact(p)))
        && b.iter().all(|p| a.iter().any(|q| q.eq_exact(p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn corners_lie_in_every_disk_and_midpoints_strictly_inside(fam in family()) {
        let region = intersect_region(&fam).unwrap();
        let corners = region.corners();
        for c in &corners {
            prop_assert!(fam.iter().all(|d| c.in_disk(d)));
        }
        for (i, p) in corners.iter().enumerate() {
            for q in &corners[i + 1..] {
                if p.eq_exact(q) {
                    continue;
                }
                for d in &fam {
                    prop_assert_eq!(midpoint_power(p, q, d), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn region_ignores_input_order(
        (fam, shuffled) in family().prop_flat_map(|f| (Just(f.clone()), Just(f).prop_shuffle()))
    ) {
        let a = intersect_region(&fam).unwrap();
        let b = intersect_region(&shuffled).unwrap();
        prop_assert_eq!(a.kind(), b.kind());
        prop_assert!(same_points(&a.corners(), &b.corners()));
        match (&a, &b) {
            (ArcRegion::FullDisk { circle: x, .. }, ArcRegion::FullDisk { circle: y, .. }) => {
                prop_assert_eq!(x, y)
            }
            (ArcRegion::Region { arcs: x }, ArcRegion::Region { arcs: y }) => {
                for arc in x {
                    prop_assert!(y.iter().any(|o| o.circle == arc.circle
                        && o.start.eq_exact(&arc.start)
                        && o.end.eq_exact(&arc.end)));
                }
            }
            _ => {}
        }
    }
}
