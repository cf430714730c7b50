//! Does `P_k(r, x, y)` meet every median line of `V`?
//!
//! Equivalent tangent formulation: for every line `t` tangent to the polygon,
//! the open halfplane `t⁺` bounded by `t` and not containing the polygon must
//! hold fewer than `n/2` points. A tangent rotating clockwise once around the
//! polygon changes `|V ∩ t⁺|` only when it passes through a point outside the
//! polygon, twice per such point (an entry and an exit). The sweep starts at
//! the tangent through the top vertex with its outward normal pointing up.
//!
//! Event order is decided by comparisons of the form "which side of a line
//! through `(x, y) + r * v` is the point `p` on", each of which is an affine
//! sign test in `(r, x, y)`. With tracing on, every such comparison is logged
//! with its hyperplane.

use std::cmp::Ordering;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{
    locate, tangent_pair_at, ComparisonLog, CriticalHyperplane, Frame, Location, Point, PolygonParams, Side,
    TracedComparison, Tracer, UnitPolygon,
};
use crate::median::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    Enter,
    Exit,
}

/// A tangent position at which one point enters or leaves `t⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepEvent {
    pub point_index: usize,
    pub kind: EventKind,
    /// Clockwise angle from straight up of the tangent's outward normal.
    /// An exit at the starting tangent itself is reported as `2π`, since it
    /// closes the revolution.
    pub angle_key: f64,
}

/// Outcome of a traced decision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionTrace {
    pub params: PolygonParams,
    pub verdict: bool,
    /// Every parameter-dependent comparison, in evaluation order.
    pub comparisons: ComparisonLog,
}

impl DecisionTrace {
    pub fn hyperplanes(&self) -> impl Iterator<Item = &CriticalHyperplane> {
        self.comparisons.iter().map(|c| &c.hyperplane)
    }
}

/// The `|V ∩ t⁺|` counter over one revolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepProfile {
    /// Count at the starting tangent.
    pub initial: i64,
    /// Count right after each group of events sharing a tangent position.
    pub after_groups: Vec<i64>,
    pub event_count: usize,
    pub verdict: bool,
}

/// True iff `P_k(r, x, y)` meets every median line of `points` (touching counts).
pub fn decide(params: &PolygonParams, points: &PointSet) -> Result<bool> {
    Ok(Decider::new(params.k, points)?.decide(params.r, params.x, params.y))
}

pub fn decide_with_trace(params: &PolygonParams, points: &PointSet) -> Result<DecisionTrace> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    let mut tracer = Tracer::on();
    let sweep = run_sweep(Frame::new(*params, &unit), points, &mut tracer);
    Ok(DecisionTrace {
        params: *params,
        verdict: sweep.profile.verdict,
        comparisons: tracer.into_log(),
    })
}

/// Events of every point strictly outside the polygon, in sweep order.
pub fn sweep_events(points: &PointSet, params: &PolygonParams) -> Result<Vec<SweepEvent>> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    let sweep = run_sweep(Frame::new(*params, &unit), points, &mut Tracer::off());
    let end_sector = sweep.end_sector;
    Ok(sweep
        .events
        .iter()
        .map(|e| SweepEvent {
            point_index: e.point_index as usize,
            kind: e.kind,
            angle_key: if e.sector == end_sector { 2.0 * PI } else { e.angle_key() },
        })
        .collect())
}

pub fn sweep_profile(params: &PolygonParams, points: &PointSet) -> Result<SweepProfile> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    Ok(run_sweep(Frame::new(*params, &unit), points, &mut Tracer::off()).profile)
}

/// Repeated decisions for one point set and side count, sharing the polygon
/// direction tables.
#[derive(Debug, Clone)]
pub struct Decider<'a> {
    unit: UnitPolygon,
    points: &'a PointSet,
}

impl<'a> Decider<'a> {
    pub fn new(k: usize, points: &'a PointSet) -> Result<Self> {
        PolygonParams { k, r: 0.0, x: 0.0, y: 0.0 }.validate()?;
        Ok(Decider {
            unit: UnitPolygon::new(k),
            points,
        })
    }

    pub fn k(&self) -> usize {
        self.unit.k()
    }

    pub fn points(&self) -> &PointSet {
        self.points
    }

    /// Panics on negative or non-finite parameters.
    pub fn decide(&self, r: f64, x: f64, y: f64) -> bool {
        let params = PolygonParams { k: self.unit.k(), r, x, y };
        assert!(params.validate().is_ok(), "invalid polygon parameters {params:?}");
        run_sweep(Frame::new(params, &self.unit), self.points, &mut Tracer::off())
            .profile
            .verdict
    }
}

#[derive(Debug, Clone, Copy)]
struct RawEvent {
    /// `±(p - v)` for tangency vertex `v`: `+` for entries, `-` for exits.
    /// Its direction is the tangent direction, a quarter turn clockwise from
    /// the outward normal.
    w: Point,
    /// Coarse position of the event along the revolution; equal sectors share
    /// the tangency vertex and span less than a half turn.
    sector: u32,
    vertex: u32,
    point_index: u32,
    kind: EventKind,
}

impl RawEvent {
    fn sign(&self) -> f64 {
        match self.kind {
            EventKind::Enter => 1.0,
            EventKind::Exit => -1.0,
        }
    }

    fn angle_key(&self) -> f64 {
        let a = (-self.w.y).atan2(self.w.x);
        if a < 0.0 {
            a + 2.0 * PI
        } else {
            a
        }
    }
}

struct Sweep {
    events: Vec<RawEvent>,
    end_sector: u32,
    profile: SweepProfile,
}

fn run_sweep(frame: Frame<'_>, points: &PointSet, tracer: &mut Tracer) -> Sweep {
    let unit = frame.unit;
    let k = unit.k();
    let degenerate = frame.params.r == 0.0;
    let end_sector = if degenerate { 4 } else { 2 * k as u32 };

    let mut events = Vec::new();
    let mut initial = 0i64;
    for (idx, &p) in points.iter().enumerate() {
        let (loc, wedge) = locate(frame, p, tracer);
        if loc != Location::Outside {
            continue;
        }
        // Strictly above the starting tangent y = y_c + r.
        if frame.probe(tracer, Point::new(1.0, 0.0), Point::new(0.0, 1.0), p) == Side::Above {
            initial += 1;
        }
        let pair = tangent_pair_at(frame, p, wedge, tracer);
        for (kind, vertex) in [(EventKind::Enter, pair.entry), (EventKind::Exit, pair.exit)] {
            let mut e = RawEvent {
                w: Point::ORIGIN,
                sector: 0,
                vertex: vertex as u32,
                point_index: idx as u32,
                kind,
            };
            e.w = (p - frame.vertex(vertex)) * e.sign();
            e.sector = if degenerate {
                quadrant_sector(frame, tracer, &e, p)
            } else {
                half_cone_sector(frame, tracer, &e, p)
            };
            events.push(e);
        }
    }

    let pts = points.points();
    let mut cmp = |a: &RawEvent, b: &RawEvent| compare_events(frame, tracer, pts, a, b);
    // Ties: exits first, then by point index.
    merge_sort_by(&mut events, &mut |a, b| {
        cmp(a, b)
            .then_with(|| (a.kind == EventKind::Enter).cmp(&(b.kind == EventKind::Enter)))
            .then_with(|| a.point_index.cmp(&b.point_index))
    });

    let n = points.len() as i64;
    let mut count = initial;
    let mut verdict = 2 * count < n;
    let mut after_groups = Vec::new();
    let mut start = 0;
    while start < events.len() {
        let mut end = start + 1;
        while end < events.len() && cmp(&events[end - 1], &events[end]) == Ordering::Equal {
            end += 1;
        }
        for e in &events[start..end] {
            count += match e.kind {
                EventKind::Enter => 1,
                EventKind::Exit => -1,
            };
        }
        verdict &= 2 * count < n;
        after_groups.push(count);
        start = end;
    }

    Sweep {
        profile: SweepProfile {
            initial,
            after_groups,
            event_count: events.len(),
            verdict,
        },
        events,
        end_sector,
    }
}

/// Sector for `r > 0`. The normal cone of vertex `i` spans clockwise angles
/// `α_i ± π/k`; it is split at `α_i` into a lower half (sector `2i - 1`, or
/// `2k - 1` for vertex 0) and an upper half (sector `2i`). An exit exactly at
/// the starting tangent is moved to the end (sector `2k`).
fn half_cone_sector(frame: Frame<'_>, tracer: &mut Tracer, e: &RawEvent, p: Point) -> u32 {
    let k = frame.unit.k() as u32;
    let i = e.vertex;
    let u = frame.unit.vertex(i as usize);
    // Sign of (p - v)·u: is the tangent past the vertex direction?
    let raw = frame.probe(tracer, u.perp_cw(), u, p);
    let side = oriented(raw, e.kind);
    if side != Side::Above {
        if i == 0 && side == Side::On && e.kind == EventKind::Exit {
            2 * k
        } else {
            2 * i
        }
    } else if i == 0 {
        2 * k - 1
    } else {
        2 * i - 1
    }
}

/// Sector for `r = 0`: the quarter turn containing the event, or 4 for an
/// exit exactly at the starting tangent.
fn quadrant_sector(frame: Frame<'_>, tracer: &mut Tracer, e: &RawEvent, p: Point) -> u32 {
    let origin = Point::ORIGIN;
    let sx = oriented(frame.probe(tracer, Point::new(0.0, -1.0), origin, p), e.kind);
    let sy = oriented(frame.probe(tracer, Point::new(1.0, 0.0), origin, p), e.kind);
    use Side::*;
    match (sx, sy) {
        (Above, On) if e.kind == EventKind::Exit => 4,
        (Above, On | Below) => 0,
        (On | Below, Below) => 1,
        (Below, On | Above) => 2,
        (On | Above, Above) => 3,
        (On, On) => 0,
    }
}

fn oriented(side: Side, kind: EventKind) -> Side {
    match (kind, side) {
        (EventKind::Enter, s) => s,
        (EventKind::Exit, Side::Above) => Side::Below,
        (EventKind::Exit, Side::Below) => Side::Above,
        (EventKind::Exit, Side::On) => Side::On,
    }
}

fn compare_events(
    frame: Frame<'_>,
    tracer: &mut Tracer,
    points: &[Point],
    a: &RawEvent,
    b: &RawEvent,
) -> Ordering {
    match a.sector.cmp(&b.sector) {
        Ordering::Equal => {}
        other => return other,
    }
    if a.point_index == b.point_index {
        return Ordering::Equal;
    }
    // Both tangents pass through the same vertex v. With p, q the two points,
    // the clockwise order follows the side of p relative to the line through
    // v parallel to pq.
    let (sa, sb) = (a.sign(), b.sign());
    let pq = b.w * sb - a.w * sa;
    let len = pq.norm();
    let value = -sa * sb * a.w.cross(b.w) / len;
    let side = Side::of(value);
    tracer.record(
        || {
            let p = points[a.point_index as usize];
            CriticalHyperplane::from_direction(pq * (1.0 / len), frame.unit.vertex(a.vertex as usize), p)
        },
        side,
    );
    match (side, sa * sb > 0.0) {
        (Side::On, _) => Ordering::Equal,
        (Side::Above, true) | (Side::Below, false) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

/// Stable bottom-up merge sort. Tolerates comparators that are not a strict
/// total order on degenerate input.
fn merge_sort_by<T: Copy>(items: &mut Vec<T>, cmp: &mut impl FnMut(&T, &T) -> Ordering) {
    let n = items.len();
    if n < 2 {
        return;
    }
    let mut src = std::mem::take(items);
    let mut dst = src.clone();
    let mut width = 1;
    while width < n {
        let mut lo = 0;
        while lo < n {
            let mid = (lo + width).min(n);
            let hi = (lo + 2 * width).min(n);
            let (mut i, mut j, mut o) = (lo, mid, lo);
            while i < mid && j < hi {
                if cmp(&src[j], &src[i]) == Ordering::Less {
                    dst[o] = src[j];
                    j += 1;
                } else {
                    dst[o] = src[i];
                    i += 1;
                }
                o += 1;
            }
            dst[o..o + (mid - i)].copy_from_slice(&src[i..mid]);
            o += mid - i;
            dst[o..o + (hi - j)].copy_from_slice(&src[j..hi]);
            lo = hi;
        }
        std::mem::swap(&mut src, &mut dst);
        width *= 2;
    }
    *items = src;
}

/// Re-evaluates every logged hyperplane at `params`; true when each side
/// matches the logged outcome.
pub fn trace_sides_match(comparisons: &[TracedComparison], params: &PolygonParams) -> bool {
    comparisons
        .iter()
        .all(|c| crate::geometry::hyperplane_side(&c.hyperplane, params) == c.side)
}
