//! Point location against `P_k(r, x, y)` and tangency vertices from an
//! external point.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{ComparisonLog, Frame, Point, PolygonParams, Side, Tracer, UnitPolygon};
use crate::error::{Error, Result};

/// Vertex `i` of `P_k(r, x, y)`. Vertex 0 is the top-most point of the
/// circumcircle; indices advance clockwise.
pub fn polygon_vertex(params: &PolygonParams, i: usize) -> Result<Point> {
    params.validate()?;
    if i >= params.k {
        return Err(Error::VertexIndex { index: i, k: params.k });
    }
    let a = 2.0 * PI * i as f64 / params.k as f64;
    Ok(Point::new(params.x + params.r * a.sin(), params.y + params.r * a.cos()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Vertices touched by the two supporting lines from an external point `p`.
///
/// `entry`, `p`, `exit` are in clockwise order. As a rotating tangent sweeps
/// clockwise around the polygon, `p` enters the open outer halfplane when the
/// tangent touches `entry` and leaves it when the tangent touches `exit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangentPair {
    pub entry: usize,
    pub exit: usize,
}

/// Classifies `p` against `P_k(r, x, y)` with a wedge binary search followed
/// by a single edge test.
pub fn classify_point(p: Point, params: &PolygonParams) -> Result<Location> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    Ok(locate(Frame::new(*params, &unit), p, &mut Tracer::off()).0)
}

/// [`classify_point`] plus the log of every parameter-dependent comparison.
pub fn classify_point_traced(p: Point, params: &PolygonParams) -> Result<(Location, ComparisonLog)> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    let mut tracer = Tracer::on();
    let (loc, _) = locate(Frame::new(*params, &unit), p, &mut tracer);
    Ok((loc, tracer.into_log()))
}

/// Vertex indices of tangency from `p`, which must lie strictly outside.
///
/// When a supporting line contains a whole edge, the endpoint reached first
/// when walking clockwise from vertex 0 is reported. For `r = 0` every
/// tangent passes through the center and vertex 0 is reported twice.
pub fn tangent_vertices(p: Point, params: &PolygonParams) -> Result<TangentPair> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    let frame = Frame::new(*params, &unit);
    let mut tracer = Tracer::off();
    match locate(frame, p, &mut tracer) {
        (Location::Outside, wedge) => Ok(tangent_pair_at(frame, p, wedge, &mut tracer)),
        (loc, _) => Err(Error::NotOutside(format!("{p} is {loc:?}"))),
    }
}

/// Wedge index `w` (the triangle `center, v_w, v_{w+1}`) containing `p`, and
/// the location of `p`.
pub(crate) fn locate(frame: Frame<'_>, p: Point, tracer: &mut Tracer) -> (Location, usize) {
    let wedge = wedge_of(frame, p, tracer);
    let unit = frame.unit;
    let loc = match frame.probe(tracer, unit.edge(wedge), unit.vertex(wedge), p) {
        Side::Above => Location::Outside,
        Side::On => Location::Boundary,
        Side::Below => Location::Inside,
    };
    (loc, wedge)
}

fn wedge_of(frame: Frame<'_>, p: Point, tracer: &mut Tracer) -> usize {
    let unit = frame.unit;
    let k = unit.k();
    let origin = Point::ORIGIN;

    // Clockwise angles in [0, π) form the right half, [π, 2π) the left half.
    let right = match frame.probe(tracer, Point::new(0.0, 1.0), origin, p) {
        Side::Below => true,
        Side::Above => false,
        Side::On => frame.probe(tracer, Point::new(1.0, 0.0), origin, p) == Side::Above,
    };
    // Is the clockwise angle of p at or past the ray to vertex j? Valid while
    // both directions lie in the same half.
    let mut at_or_past = |j: usize| frame.probe(tracer, unit.vertex(j), origin, p) != Side::Above;

    let h = unit.right_half_len();
    let (mut lo, mut hi) = if right {
        (0, h)
    } else {
        if !at_or_past(h) {
            return h - 1;
        }
        (h, k)
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at_or_past(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Tangency vertices of an `Outside` point whose wedge is already known.
///
/// The strictly visible edges form a contiguous run around `wedge`; its
/// first vertex is the entry tangency and its last vertex the exit tangency.
pub(crate) fn tangent_pair_at(frame: Frame<'_>, p: Point, wedge: usize, tracer: &mut Tracer) -> TangentPair {
    let unit = frame.unit;
    let k = unit.k();
    if frame.params.r == 0.0 {
        return TangentPair { entry: 0, exit: 0 };
    }
    let mut edge_side = |j: usize| frame.probe(tracer, unit.edge(j), unit.vertex(j), p);

    let half = k / 2;
    let back = |m: usize| (wedge + k - m % k) % k;
    let fwd = |m: usize| (wedge + m) % k;

    let reach = |edge_side: &mut dyn FnMut(usize) -> Side, index: &dyn Fn(usize) -> usize| {
        let (mut lo, mut hi) = (0usize, half + 1);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if edge_side(index(mid)) == Side::Above {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    let m_entry = reach(&mut edge_side, &back);
    let m_exit = reach(&mut edge_side, &fwd);
    let mut entry = back(m_entry);
    let mut exit = (fwd(m_exit) + 1) % k;

    // A supporting line through a whole edge: report the endpoint that comes
    // first clockwise from vertex 0.
    if entry != 0 && edge_side((entry + k - 1) % k) == Side::On {
        entry -= 1;
    }
    if exit == k - 1 && edge_side(exit) == Side::On {
        exit = 0;
    }
    TangentPair { entry, exit }
}
