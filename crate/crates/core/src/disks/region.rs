//! Intersection of closed disks as a counterclockwise arc polygon.
//!
//! A region is clipped one disk at a time. The region is always the
//! intersection of its carrier disks (the disks owning at least one
//! boundary arc), so a clip step rebuilds the boundary from the carriers
//! plus the new disk and drops any disk that no longer contributes.
//!
//! Rebuilding works circle by circle: the part of circle `∂j` inside every
//! other disk is an intersection of arcs on `∂j`. Arc endpoints are sorted
//! by exact polar angle, the pieces between consecutive endpoints are
//! tested against every constraint, and surviving pieces are merged into
//! maximal arcs. Arcs of all circles are then chained end to start.

use std::cmp::Ordering;

use super::quad::{angle_cmp, QuadPoint};
use super::relation::{circle_cut, pair_relation, CircleCut, PairRelation};
use super::{Disk, Point};
use crate::error::{Error, Result};

/// Counterclockwise arc of the boundary circle of `circle`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    /// Index of the carrying disk in the input family.
    pub disk: usize,
    pub circle: Disk,
    pub start: QuadPoint,
    pub end: QuadPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcRegion {
    Empty,
    SinglePoint {
        point: QuadPoint,
    },
    FullDisk {
        disk: usize,
        circle: Disk,
    },
    /// Arcs in counterclockwise order; each arc ends where the next starts.
    Region {
        arcs: Vec<Arc>,
    },
}

impl ArcRegion {
    pub fn is_empty(&self) -> bool {
        matches!(self, Self::Empty)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Empty => "empty",
            Self::SinglePoint { .. } => "single-point",
            Self::FullDisk { .. } => "full-disk",
            Self::Region { .. } => "region",
        }
    }

    /// Sorted indices of the disks that own boundary arcs.
    pub fn carriers(&self) -> Vec<usize> {
        let mut c: Vec<usize> = match self {
            Self::FullDisk { disk, .. } => vec![*disk],
            Self::Region { arcs } => arcs.iter().map(|a| a.disk).collect(),
            _ => Vec::new(),
        };
        c.sort_unstable();
        c.dedup();
        c
    }

    fn carrier_disks(&self) -> Vec<&Disk> {
        match self {
            Self::FullDisk { circle, .. } => vec![circle],
            Self::Region { arcs } => arcs.iter().map(|a| &a.circle).collect(),
            _ => Vec::new(),
        }
    }

    /// Arc endpoints; the start of arc `i` is corner `i`.
    pub fn corners(&self) -> Vec<QuadPoint> {
        match self {
            Self::SinglePoint { point } => vec![point.clone()],
            Self::Region { arcs } => arcs.iter().map(|a| a.start.clone()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn arcs(&self) -> &[Arc] {
        match self {
            Self::Region { arcs } => arcs,
            _ => &[],
        }
    }

    /// Exact closed membership.
    pub fn contains(&self, p: &QuadPoint) -> bool {
        match self {
            Self::Empty => false,
            Self::SinglePoint { point } => point.eq_exact(p),
            _ => self.carrier_disks().iter().all(|d| p.in_disk(d)),
        }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.contains(&QuadPoint::rational(p))
    }

    /// Some point of the region: a corner, the single point, or the center.
    pub fn sample_point(&self) -> Option<QuadPoint> {
        match self {
            Self::Empty => None,
            Self::SinglePoint { point } => Some(point.clone()),
            Self::FullDisk { circle, .. } => Some(QuadPoint::rational(circle.center())),
            Self::Region { arcs } => Some(arcs[0].start.clone()),
        }
    }
}

/// Two-disk intersection: a two-arc lens, a touching point, the inner disk,
/// or nothing.
pub fn pair_lens(a: &Disk, b: &Disk) -> ArcRegion {
    intersect_region(&[a.clone(), b.clone()]).expect("two disks")
}

/// Intersection of all disks in `family`, clipping one disk at a time.
pub fn intersect_region(family: &[Disk]) -> Result<ArcRegion> {
    let first = family.first().ok_or(Error::TooFewDisks {
        needed: 1,
        found: 0,
    })?;
    let mut region = ArcRegion::FullDisk {
        disk: 0,
        circle: first.clone(),
    };
    for i in 1..family.len() {
        region = clip(family, region, i);
    }
    Ok(region)
}

fn clip(family: &[Disk], region: ArcRegion, i: usize) -> ArcRegion {
    let disk = &family[i];
    match region {
        ArcRegion::Empty => ArcRegion::Empty,
        ArcRegion::SinglePoint { point } => {
            if point.in_disk(disk) {
                ArcRegion::SinglePoint { point }
            } else {
                ArcRegion::Empty
            }
        }
        region => {
            let mut carriers = region.carriers();
            if carriers.iter().any(|&c| family[c] == *disk) {
                return region;
            }
            carriers.push(i);
            assemble(family, &carriers)
        }
    }
}

enum Cut {
    Full,
    Touch(usize),
    Arc(usize, usize),
}

fn in_closed(t: usize, from: usize, to: usize) -> bool {
    if from <= to {
        from <= t && t <= to
    } else {
        t >= from || t <= to
    }
}

fn in_half_open(t: usize, from: usize, to: usize) -> bool {
    if from < to {
        from <= t && t < to
    } else {
        t >= from || t < to
    }
}

/// What survives of circle `∂j` inside all other carriers.
struct CirclePiece {
    arcs: Vec<(QuadPoint, QuadPoint)>,
    isolated: Vec<QuadPoint>,
}

fn circle_piece(family: &[Disk], j: usize, others: impl Iterator<Item = usize>) -> CirclePiece {
    let empty = CirclePiece {
        arcs: Vec::new(),
        isolated: Vec::new(),
    };
    let dj = &family[j];
    let center = dj.center();
    let mut raw = Vec::new();
    for k in others {
        match circle_cut(dj, &family[k]) {
            CircleCut::Nothing => return empty,
            cut => raw.push(cut),
        }
    }

    let mut points: Vec<QuadPoint> = Vec::new();
    for cut in &raw {
        match cut {
            CircleCut::Touch(p) => points.push(p.clone()),
            CircleCut::Arc { from, to } => {
                points.push(from.clone());
                points.push(to.clone());
            }
            _ => {}
        }
    }
    points.sort_by(|p, q| angle_cmp(center, p, q));
    points.dedup_by(|p, q| angle_cmp(center, p, q) == Ordering::Equal);
    let m = points.len();
    if m == 0 {
        return empty;
    }
    let rank = |p: &QuadPoint| {
        points
            .binary_search_by(|q| angle_cmp(center, q, p))
            .expect("breakpoint was collected")
    };
    let cuts: Vec<Cut> = raw
        .iter()
        .map(|cut| match cut {
            CircleCut::Full => Cut::Full,
            CircleCut::Touch(p) => Cut::Touch(rank(p)),
            CircleCut::Arc { from, to } => Cut::Arc(rank(from), rank(to)),
            CircleCut::Nothing => unreachable!(),
        })
        .collect();

    // open[t]: the open piece between breakpoints t and t+1
    let open: Vec<bool> = (0..m)
        .map(|t| {
            m > 1
                && cuts.iter().all(|c| match *c {
                    Cut::Full => true,
                    Cut::Touch(_) => false,
                    Cut::Arc(a, b) => in_half_open(t, a, b),
                })
        })
        .collect();
    let closed = |t: usize| {
        cuts.iter().all(|c| match *c {
            Cut::Full => true,
            Cut::Touch(r) => r == t,
            Cut::Arc(a, b) => in_closed(t, a, b),
        })
    };
    debug_assert!(
        !open.iter().all(|&o| o),
        "full circle survives only for FullDisk"
    );

    let mut piece = CirclePiece {
        arcs: Vec::new(),
        isolated: Vec::new(),
    };
    let prev = |t: usize| (t + m - 1) % m;
    for t in 0..m {
        if !open[t] && !open[prev(t)] && closed(t) {
            piece.isolated.push(points[t].clone());
        }
    }
    let Some(first) = (0..m).find(|&t| !open[prev(t)] && open[t]) else {
        return piece;
    };
    let mut t = first;
    loop {
        if open[t] && !open[prev(t)] {
            let start = t;
            let mut end = t;
            while open[end] {
                end = (end + 1) % m;
            }
            piece
                .arcs
                .push((points[start].clone(), points[end].clone()));
            t = end;
        } else {
            t = (t + 1) % m;
        }
        if t == first {
            break;
        }
    }
    piece
}

/// Intersection of the given carrier disks, which must be pairwise distinct.
fn assemble(family: &[Disk], carriers: &[usize]) -> ArcRegion {
    for (n, &a) in carriers.iter().enumerate() {
        for &b in &carriers[n + 1..] {
            if pair_relation(&family[a], &family[b]) == PairRelation::Disjoint {
                return ArcRegion::Empty;
            }
        }
    }
    if let Some(&j) = carriers.iter().find(|&&j| {
        carriers
            .iter()
            .all(|&k| k == j || family[j].is_inside(&family[k]))
    }) {
        return ArcRegion::FullDisk {
            disk: j,
            circle: family[j].clone(),
        };
    }

    let mut arcs = Vec::new();
    let mut isolated = Vec::new();
    for &j in carriers {
        let piece = circle_piece(family, j, carriers.iter().copied().filter(|&k| k != j));
        arcs.extend(piece.arcs.into_iter().map(|(start, end)| Arc {
            disk: j,
            circle: family[j].clone(),
            start,
            end,
        }));
        isolated.extend(piece.isolated);
    }

    if arcs.is_empty() {
        return match isolated.into_iter().next() {
            Some(point) => ArcRegion::SinglePoint { point },
            None => ArcRegion::Empty,
        };
    }

    let mut pool = arcs;
    let mut ordered = vec![pool.remove(0)];
    while !pool.is_empty() {
        let end = &ordered.last().expect("nonempty").end;
        let next = pool
            .iter()
            .position(|a| a.start.eq_exact(end))
            .unwrap_or_else(|| panic!("arc chain broken at {end}"));
        ordered.push(pool.remove(next));
    }
    assert!(
        ordered
            .last()
            .expect("nonempty")
            .end
            .eq_exact(&ordered[0].start),
        "arc chain does not close"
    );
    ArcRegion::Region { arcs: ordered }
}
