use itertools::Itertools;

use super::quad::QuadPoint;
use super::region::intersect_region;
use super::relation::{crossing_points, pair_relation, PairRelation};
use super::Disk;
use crate::error::{Error, Result};
use crate::par;

/// Whether three closed disks share a point.
///
/// Decided by case analysis rather than by building the region:
/// a disjoint pair rules it out; a nested pair reduces to the remaining
/// pair; a touching pair meets the third disk iff its touching point does;
/// otherwise the three-way intersection, if nonempty, has a corner, and
/// every corner is a crossing point of two circles lying in the third disk.
pub fn triple_meet(a: &Disk, b: &Disk, c: &Disk) -> bool {
    let disks = [a, b, c];
    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    let relations: Vec<PairRelation> = pairs
        .iter()
        .map(|&(i, j, _)| pair_relation(disks[i], disks[j]))
        .collect();

    if relations.iter().any(|r| !r.meets()) {
        return false;
    }
    // Nested pair: the smaller disk meets the third one (all pairs meet).
    if relations.iter().any(|r| {
        matches!(
            r,
            PairRelation::Equal
                | PairRelation::ProperContainment { .. }
                | PairRelation::InternalTangency { .. }
        )
    }) {
        return true;
    }
    for (r, &(_, _, k)) in relations.iter().zip(&pairs) {
        if let PairRelation::ExternalOsculation { point } = r {
            return QuadPoint::rational(point).in_disk(disks[k]);
        }
    }
    // All three pairs are proper lenses.
    pairs.iter().any(|&(i, j, k)| {
        let (p, q) = crossing_points(disks[i], disks[j]);
        p.in_disk(disks[k]) || q.in_disk(disks[k])
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum HellyOutcome {
    CommonPoint(QuadPoint),
    ViolatingTriple([usize; 3]),
}

/// Either a point common to every disk, or the lexicographically first
/// triple of disks with empty intersection.
///
/// # Panics
///
/// If the family has empty intersection while every triple meets. That
/// would contradict Helly's theorem for disks.
pub fn minimalist_helly_check(family: &[Disk]) -> Result<HellyOutcome> {
    if family.len() < 3 {
        return Err(Error::TooFewDisks {
            needed: 3,
            found: family.len(),
        });
    }
    if let Some(p) = intersect_region(family)?.sample_point() {
        return Ok(HellyOutcome::CommonPoint(p));
    }
    let triples: Vec<[usize; 3]> = (0..family.len())
        .combinations(3)
        .map(|t| [t[0], t[1], t[2]])
        .collect();
    let hit = par::position_first(&triples, |&[i, j, k]| {
        !triple_meet(&family[i], &family[j], &family[k])
    })
    .unwrap_or_else(|| {
        panic!(
            "Helly violated: {} disks with empty intersection but every triple meets",
            family.len()
        )
    });
    Ok(HellyOutcome::ViolatingTriple(triples[hit]))
}
