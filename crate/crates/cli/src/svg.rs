//! Plain SVG rendering of a point set, its limiting median lines and a yolk.

use std::fmt::Write as _;

use yolk::{Line, Point, PointSet};

/// The yolk as drawn: its boundary polygon and, for the L2 approximation,
/// the circumscribed circle.
pub struct Ball {
    pub polygon: Vec<Point>,
    pub circle: Option<(Point, f64)>,
}

pub fn render(points: &PointSet, lines: &[Line], ball: &Ball) -> String {
    let (mut lo, mut hi) = points.bounding_box();
    for p in &ball.polygon {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if let Some((c, r)) = ball.circle {
        lo = Point::new(lo.x.min(c.x - r), lo.y.min(c.y - r));
        hi = Point::new(hi.x.max(c.x + r), hi.y.max(c.y + r));
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let pad = 0.1 * span;
    let (x0, y0) = (lo.x - pad, -(hi.y + pad));
    let (w, h) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
    let stroke = span / 400.0;
    // SVG's y axis points down.
    let at = |p: Point| (p.x, -p.y);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {w} {h}" width="800" height="{}">"#,
        (800.0 * h / w).round()
    );
    let _ = writeln!(out, r#"<rect x="{x0}" y="{y0}" width="{w}" height="{h}" fill="white"/>"#);

    let reach = 4.0 * (w + h);
    for l in lines {
        let foot = l.normal() * l.c;
        let dir = l.normal().perp_ccw();
        let (ax, ay) = at(foot - dir * reach);
        let (bx, by) = at(foot + dir * reach);
        let _ = writeln!(
            out,
            r##"<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#9aa5b1" stroke-width="{stroke}"/>"##
        );
    }

    if let Some((c, r)) = ball.circle {
        let (cx, cy) = at(c);
        let _ = writeln!(
            out,
            r##"<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#2b6cb0" stroke-width="{}"/>"##,
            1.5 * stroke
        );
    }
    let path: Vec<String> = ball
        .polygon
        .iter()
        .map(|&p| {
            let (x, y) = at(p);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#c53030" fill-opacity="0.15" stroke="#c53030" stroke-width="{}"/>"##,
        path.join(" "),
        1.5 * stroke
    );

    for p in points.iter() {
        let (x, y) = at(*p);
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{}" fill="black"/>"#, 3.0 * stroke);
    }
    out.push_str("</svg>\n");
    out
}
