//! JSON renderings of results. Field names follow the Rust types; every
//! rational is a `[num, den]` pair as in instance files.

use serde_json::{json, Value};

use crate::disks::{
    ArcRegion, ClosestPairResult, GFeature, HellyOutcome, PairRelation, QuadNum, QuadPoint,
    SeparatingLine, Which,
};
use crate::enclosure::{Enclosure, PointEnclosure};
use crate::exactq::AffineSolutionSet;
use crate::instance::rat_json;
use crate::linear::{HellyCertificate, SamplingReport};

/// Indented JSON that keeps short arrays of numbers (such as rational
/// pairs) on one line.
pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    write_pretty(v, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items
            .iter()
            .all(|i| !i.is_object() && !i.is_array() || is_flat_pair(i)),
        _ => true,
    }
}

fn is_flat_pair(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|a| a.iter().all(|i| !i.is_object() && !i.is_array()))
}

fn write_pretty(v: &Value, depth: usize, out: &mut String) {
    const WIDTH: usize = 88;
    let compact = v.to_string();
    if is_flat(v) && compact.len() + 2 * depth <= WIDTH {
        out.push_str(&compact.replace(',', ", "));
        return;
    }
    let pad = "  ".repeat(depth + 1);
    let (open, close, items): (char, char, Vec<(Option<&String>, &Value)>) = match v {
        Value::Array(a) => ('[', ']', a.iter().map(|i| (None, i)).collect()),
        Value::Object(o) => ('{', '}', o.iter().map(|(k, i)| (Some(k), i)).collect()),
        _ => unreachable!("scalars are flat"),
    };
    if items.is_empty() {
        out.push(open);
        out.push(close);
        return;
    }
    out.push(open);
    out.push('\n');
    for (n, (key, item)) in items.iter().enumerate() {
        out.push_str(&pad);
        if let Some(k) = key {
            out.push_str(&Value::String((*k).clone()).to_string());
            out.push_str(": ");
        }
        write_pretty(item, depth + 1, out);
        if n + 1 < items.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str(&"  ".repeat(depth));
    out.push(close);
}

pub fn witness_json(w: &AffineSolutionSet) -> Value {
    json!({
        "dimension": w.dimension(),
        "point": w.point.iter().map(rat_json).collect::<Vec<_>>(),
        "basis": w.basis.iter()
            .map(|v| v.iter().map(rat_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn certificate_json(c: &HellyCertificate) -> Value {
    match c {
        HellyCertificate::Consistent { witness } => json!({
            "verdict": "consistent",
            "witness": witness_json(witness),
        }),
        HellyCertificate::Inconsistent { subsystem } => json!({
            "verdict": "inconsistent",
            "subsystem": subsystem,
        }),
    }
}

pub fn sampling_json(r: &SamplingReport) -> Value {
    json!({
        "samples_drawn": r.samples_drawn,
        "subsystem_size": r.subsystem_size,
        "inconsistent_samples": r.inconsistent_samples,
        "first_hit": r.first_hit,
        "rng": r.rng,
        "seed": r.seed,
    })
}

pub fn quad_json(q: &QuadNum) -> Value {
    json!({ "a": rat_json(&q.a), "b": rat_json(&q.b), "d": rat_json(&q.d) })
}

pub fn enclosure_json(e: &Enclosure) -> Value {
    json!({ "lo": rat_json(&e.lo), "hi": rat_json(&e.hi) })
}

pub fn point_enclosure_json(p: &PointEnclosure) -> Value {
    json!({ "x": enclosure_json(&p.x), "y": enclosure_json(&p.y) })
}

pub fn quad_point_json(p: &QuadPoint, prec: u32) -> Value {
    let enc = PointEnclosure::of(p, prec);
    let (x, y) = enc.to_f64();
    json!({
        "exact": { "x": quad_json(&p.x), "y": quad_json(&p.y) },
        "enclosure": point_enclosure_json(&enc),
        "approx": [x, y],
    })
}

pub fn helly_outcome_json(o: &HellyOutcome, prec: u32) -> Value {
    match o {
        HellyOutcome::CommonPoint(p) => json!({
            "verdict": "common-point",
            "point": quad_point_json(p, prec),
        }),
        HellyOutcome::ViolatingTriple(t) => json!({
            "verdict": "violating-triple",
            "triple": t,
        }),
    }
}

pub fn region_json(r: &ArcRegion, prec: u32) -> Value {
    match r {
        ArcRegion::Empty => json!({ "kind": r.kind() }),
        ArcRegion::SinglePoint { point } => json!({
            "kind": r.kind(),
            "point": quad_point_json(point, prec),
        }),
        ArcRegion::FullDisk { disk, .. } => json!({ "kind": r.kind(), "disk": disk }),
        ArcRegion::Region { arcs } => json!({
            "kind": r.kind(),
            "arcs": arcs.iter().map(|a| json!({
                "disk": a.disk,
                "start": quad_point_json(&a.start, prec),
                "end": quad_point_json(&a.end, prec),
            })).collect::<Vec<_>>(),
        }),
    }
}

pub fn feature_json(f: &GFeature) -> Value {
    match f {
        GFeature::ArcInterior { arc } => json!({ "arc_interior": arc }),
        GFeature::Corner { corner } => json!({ "corner": corner }),
    }
}

pub fn closest_pair_json(c: &ClosestPairResult, prec: u32) -> Value {
    json!({
        "on_t": point_enclosure_json(&c.on_t),
        "on_g": quad_point_json(&c.on_g, prec),
        "squared_distance": enclosure_json(&c.squared_distance),
        "g_feature": feature_json(&c.g_feature),
    })
}

pub fn separating_line_json(l: &SeparatingLine, prec: u32) -> Value {
    json!({
        "point": quad_point_json(&l.point, prec),
        "normal": { "x": quad_json(&l.normal.0), "y": quad_json(&l.normal.1) },
        "feature": feature_json(&l.feature),
        "separated": l.separated,
    })
}

pub fn relation_name(r: &PairRelation) -> &'static str {
    match r {
        PairRelation::Disjoint => "disjoint",
        PairRelation::ExternalOsculation { .. } => "external-osculation",
        PairRelation::ProperLens => "proper-lens",
        PairRelation::InternalTangency { .. } => "internal-tangency",
        PairRelation::ProperContainment { .. } => "proper-containment",
        PairRelation::Equal => "equal",
    }
}

pub fn which_name(w: Which) -> &'static str {
    match w {
        Which::First => "first",
        Which::Second => "second",
    }
}
