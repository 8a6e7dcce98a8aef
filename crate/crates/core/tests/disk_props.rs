use std::f64::consts::TAU;

use itertools::Itertools;
use proptest::prelude::*;

use helly_core::disks::{
    closest_pair, intersect_region, minimalist_helly_check, pair_relation, separating_line,
    triple_meet, ArcRegion, Disk, HellyOutcome, PairRelation, Point, Which,
};
use helly_core::exactq::{rat, Rat};
use helly_core::oracles::{grid_meet_oracle, GridResult, GridSpec};

fn disk(x: Rat, y: Rat, r: Rat) -> Disk {
    Disk::new(Point::new(x, y), r).unwrap()
}

/// Small integer grid: tangencies, containments and shared circles are common.
fn grid_disk() -> impl Strategy<Value = Disk> {
    (-4i64..=4, -4i64..=4, 1i64..=5).prop_map(|(x, y, r)| disk(rat(x, 1), rat(y, 1), rat(r, 1)))
}

/// Denominator 7 keeps circle configurations generic.
fn generic_disk() -> impl Strategy<Value = Disk> {
    (-40i64..=40, -40i64..=40, 14i64..=60)
        .prop_map(|(x, y, r)| disk(rat(x, 7), rat(y, 7), rat(r, 7)))
}

fn any_disk() -> impl Strategy<Value = Disk> {
    prop_oneof![grid_disk(), generic_disk()]
}

fn f(x: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap()
}

fn cf(d: &Disk) -> (f64, f64, f64) {
    (f(&d.center().x), f(&d.center().y), f(d.radius()))
}

/// Boundary walk: number of maximal runs of circle `j` inside every other
/// disk, sampled at `steps` angles. `None` when a sample is too close to a
/// circle to classify, or a whole circle survives.
fn walked_arcs(fam: &[Disk], j: usize, steps: usize) -> Option<usize> {
    let (cx, cy, r) = cf(&fam[j]);
    let mut inside = Vec::with_capacity(steps);
    for s in 0..steps {
        let a = TAU * s as f64 / steps as f64;
        let (px, py) = (cx + r * a.cos(), cy + r * a.sin());
        let mut all_in = true;
        for (k, d) in fam.iter().enumerate() {
            if k == j || d == &fam[j] {
                continue;
            }
            let (dx, dy, dr) = cf(d);
            let gap = (px - dx).hypot(py - dy) - dr;
            if gap.abs() < 1e-6 {
                return None;
            }
            all_in &= gap < 0.0;
        }
        inside.push(all_in);
    }
    if inside.iter().all(|&b| b) {
        return None;
    }
    Some(
        (0..steps)
            .filter(|&s| inside[s] && !inside[(s + steps - 1) % steps])
            .count(),
    )
}

/// Minimum distance from `c` to the region boundary, by dense sampling of
/// each carrier circle restricted to points inside all disks.
fn sampled_gap(fam: &[Disk], t: &Disk) -> Option<f64> {
    let (tx, ty, tr) = cf(t);
    let mut best = f64::INFINITY;
    for d in fam {
        let (cx, cy, r) = cf(d);
        for s in 0..20_000 {
            let a = TAU * s as f64 / 20_000.0;
            let (px, py) = (cx + r * a.cos(), cy + r * a.sin());
            let inside = fam.iter().all(|e| {
                let (ex, ey, er) = cf(e);
                (px - ex).hypot(py - ey) <= er * (1.0 + 1e-12)
            });
            if inside {
                best = best.min((px - tx).hypot(py - ty) - tr);
            }
        }
    }
    best.is_finite().then_some(best)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn triple_meet_agrees_with_region(a in any_disk(), b in any_disk(), c in any_disk()) {
        let region = intersect_region(&[a.clone(), b.clone(), c.clone()]).unwrap();
        prop_assert_eq!(triple_meet(&a, &b, &c), !region.is_empty());
        // every ordering gives the same answer
        prop_assert_eq!(triple_meet(&a, &b, &c), triple_meet(&c, &a, &b));
        prop_assert_eq!(triple_meet(&a, &b, &c), triple_meet(&b, &a, &c));
    }

    #[test]
    fn pair_relation_is_symmetric(a in any_disk(), b in any_disk()) {
        let flip = |w: Which| match w {
            Which::First => Which::Second,
            Which::Second => Which::First,
        };
        let ab = pair_relation(&a, &b);
        let ba = pair_relation(&b, &a);
        let mirrored = match ab.clone() {
            PairRelation::InternalTangency { point, inner } => {
                PairRelation::InternalTangency { point, inner: flip(inner) }
            }
            PairRelation::ProperContainment { inner } => {
                PairRelation::ProperContainment { inner: flip(inner) }
            }
            other => other,
        };
        prop_assert_eq!(mirrored, ba);
        prop_assert_eq!(ab.meets(), !intersect_region(&[a, b]).unwrap().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn helly_outcome_is_justified(fam in prop::collection::vec(any_disk(), 3..=7)) {
        match minimalist_helly_check(&fam).unwrap() {
            HellyOutcome::CommonPoint(p) => {
                prop_assert!(fam.iter().all(|d| p.in_disk(d)));
            }
            HellyOutcome::ViolatingTriple([i, j, k]) => {
                prop_assert!(i < j && j < k);
                prop_assert!(!triple_meet(&fam[i], &fam[j], &fam[k]));
                // no earlier triple in lexicographic order fails
                for t in (0..fam.len()).combinations(3) {
                    if t == [i, j, k] {
                        break;
                    }
                    prop_assert!(triple_meet(&fam[t[0]], &fam[t[1]], &fam[t[2]]));
                }
            }
        }
    }

    #[test]
    fn grid_oracle_is_one_sided(fam in prop::collection::vec(any_disk(), 2..=5)) {
        let spec = GridSpec::new(Point::new(rat(-10, 1), rat(-10, 1)), Point::new(rat(10, 1), rat(10, 1)), 40).unwrap();
        let region = intersect_region(&fam).unwrap();
        if let GridResult::FoundPoint(p) = grid_meet_oracle(&fam, &spec) {
            prop_assert!(region.contains_point(&p));
        }
    }

    #[test]
    fn arc_counts_match_boundary_walk(fam in prop::collection::vec(generic_disk(), 2..=5)) {
        let region = intersect_region(&fam).unwrap();
        let ArcRegion::Region { arcs } = &region else { return Ok(()) };
        for j in 0..fam.len() {
            let Some(walked) = walked_arcs(&fam, j, 20_000) else { continue };
            // duplicates of a circle are attributed to one representative
            let exact = arcs.iter().filter(|a| a.circle == fam[j]).count();
            prop_assert_eq!(exact, walked, "circle {}", j);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn closest_pair_matches_sampled_minimum(
        fam in prop::collection::vec(generic_disk(), 1..=3),
        t in generic_disk(),
    ) {
        let region = intersect_region(&fam).unwrap();
        let Ok(res) = closest_pair(&t, &region, 60) else { return Ok(()) };
        prop_assert!(res.squared_distance.width() <= rat(1, 1) / Rat::from_integer(num_bigint::BigInt::from(2u8).pow(60)));
        let gap = res.squared_distance.to_f64().sqrt();
        if let Some(sampled) = sampled_gap(&fam, &t) {
            // sampling can only overshoot the true minimum
            prop_assert!(gap <= sampled + 1e-9, "{} > {}", gap, sampled);
            prop_assert!(sampled - gap < 1e-2 * (1.0 + gap), "{} vs {}", gap, sampled);
        }
        // the reported pair realises the distance
        let (gx, gy) = res.on_g.to_f64();
        let (tx, ty) = res.on_t.to_f64();
        prop_assert!(((gx - tx).hypot(gy - ty) - gap).abs() < 1e-9 * (1.0 + gap));
        prop_assert!(region.contains(&res.on_g));

        let line = separating_line(&t, &region).unwrap();
        prop_assert!(line.disk_strictly_on_t_side(&t));
        for c in region.corners() {
            prop_assert!(line.side(&c).is_le());
        }
    }
}
