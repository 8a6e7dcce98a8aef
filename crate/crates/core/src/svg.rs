//! Static SVG drawings of a disk family, its intersection region and,
//! optionally, the closest pair and separating line for a query disk.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::disks::{ArcRegion, ClosestPairResult, Disk, SeparatingLine};

pub struct Query<'a> {
    pub disk: usize,
    pub closest: &'a ClosestPairResult,
    pub line: &'a SeparatingLine,
}

fn f(q: &crate::exactq::Rat) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Renders in math orientation (y up) by negating y on output.
pub fn render(family: &[Disk], region: &ArcRegion, query: Option<&Query<'_>>) -> String {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for d in family {
        let (cx, cy, r) = (f(&d.center().x), f(&d.center().y), f(d.radius()));
        x0 = x0.min(cx - r);
        x1 = x1.max(cx + r);
        y0 = y0.min(cy - r);
        y1 = y1.max(cy + r);
    }
    if family.is_empty() {
        (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
    }
    let pad = 0.08 * (x1 - x0).max(y1 - y0);
    let (x0, y0, x1, y1) = (x0 - pad, y0 - pad, x1 + pad, y1 + pad);
    let (w, h) = (x1 - x0, y1 - y0);
    let stroke = w.max(h) / 300.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.6} {:.6} {w:.6} {h:.6}" width="640" height="{:.0}">"#,
        -y1,
        640.0 * h / w
    );
    let _ = writeln!(
        s,
        r#"<rect x="{x0:.6}" y="{:.6}" width="{w:.6}" height="{h:.6}" fill="white"/>"#,
        -y1
    );

    match region {
        ArcRegion::Empty => {}
        ArcRegion::SinglePoint { point } => {
            let (px, py) = point.to_f64();
            let _ = writeln!(
                s,
                r##"<circle class="region" cx="{px:.6}" cy="{:.6}" r="{:.6}" fill="#3b6fd8"/>"##,
                -py,
                stroke * 3.0
            );
        }
        ArcRegion::FullDisk { circle, .. } => {
            let _ = writeln!(
                s,
                r##"<circle class="region" cx="{:.6}" cy="{:.6}" r="{:.6}" fill="#3b6fd8" fill-opacity="0.55"/>"##,
                f(&circle.center().x),
                -f(&circle.center().y),
                f(circle.radius())
            );
        }
        ArcRegion::Region { arcs } => {
            let (sx, sy) = arcs[0].start.to_f64();
            let mut path = format!("M {sx:.6} {:.6}", -sy);
            for a in arcs {
                let (ax, ay) = a.start.to_f64();
                let (ex, ey) = a.end.to_f64();
                let (cx, cy) = (f(&a.circle.center().x), f(&a.circle.center().y));
                let r = f(a.circle.radius());
                // counterclockwise span exceeds π iff the center is right of the chord
                let large = ((ex - ax) * (cy - ay) - (ey - ay) * (cx - ax)) < 0.0;
                let _ = write!(
                    path,
                    " A {r:.6} {r:.6} 0 {} 0 {ex:.6} {:.6}",
                    u8::from(large),
                    -ey
                );
            }
            let _ = writeln!(
                s,
                r##"<path class="region" d="{path} Z" fill="#3b6fd8" fill-opacity="0.55" stroke="none"/>"##
            );
        }
    }

    for (i, d) in family.iter().enumerate() {
        let is_query = query.is_some_and(|q| q.disk == i);
        let color = if is_query { "#b03030" } else { "#222222" };
        let (cx, cy, r) = (f(&d.center().x), f(&d.center().y), f(d.radius()));
        let _ = writeln!(
            s,
            r#"<circle class="disk" cx="{cx:.6}" cy="{:.6}" r="{r:.6}" fill="none" stroke="{color}" stroke-width="{stroke:.6}"/>"#,
            -cy
        );
        let _ = writeln!(
            s,
            r#"<text x="{cx:.6}" y="{:.6}" font-size="{:.6}" text-anchor="middle" fill="{color}">{}</text>"#,
            -cy,
            stroke * 12.0,
            if is_query {
                "T".to_string()
            } else {
                i.to_string()
            }
        );
    }

    if let Some(q) = query {
        let (tx, ty) = q.closest.on_t.to_f64();
        let (gx, gy) = q.closest.on_g.to_f64();
        let _ = writeln!(
            s,
            r##"<line class="closest-pair" x1="{tx:.6}" y1="{:.6}" x2="{gx:.6}" y2="{:.6}" stroke="#1a9a3a" stroke-width="{:.6}"/>"##,
            -ty,
            -gy,
            stroke * 1.5
        );
        let (nx, ny) = (q.line.normal.0.to_f64(), q.line.normal.1.to_f64());
        let len = nx.hypot(ny).max(f64::MIN_POSITIVE);
        let (dx, dy) = (-ny / len, nx / len);
        let reach = w.max(h);
        let _ = writeln!(
            s,
            r##"<line class="separating-line" x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke="#7a2f9a" stroke-width="{stroke:.6}" stroke-dasharray="{:.6}"/>"##,
            gx - dx * reach,
            -(gy - dy * reach),
            gx + dx * reach,
            -(gy + dy * reach),
            stroke * 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disks::{intersect_region, Point};
    use crate::exactq::int;

    #[test]
    fn lens_has_filled_two_arc_path() {
        let fam = vec![
            Disk::new(Point::new(int(0), int(0)), int(1)).unwrap(),
            Disk::new(Point::new(int(1), int(0)), int(1)).unwrap(),
        ];
        let svg = render(&fam, &intersect_region(&fam).unwrap(), None);
        assert_eq!(svg.matches(r#"class="disk""#).count(), 2);
        assert_eq!(svg.matches(" A ").count(), 2);
        assert!(svg.contains(r#"class="region""#));
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }
}
