//! Brute-force reference computations for small inputs.
//!
//! Nothing here shares code with the sweep: the yolk comes from a linear
//! program over the limiting median lines solved by exhaustive basis
//! enumeration, and [`decide_bruteforce`] evaluates tangent halfplanes at
//! every candidate angle directly.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Line, Point, PolygonParams};
use crate::median::{limiting_median_lines, PointSet};

/// Largest point set accepted by [`yolk_bruteforce`].
pub const MAX_ORACLE_POINTS: usize = 300;

/// Ball family of the yolk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormTag {
    /// L2 disk.
    Euclidean,
    /// L1 ball.
    Diamond,
    /// L∞ ball.
    Square,
}

impl NormTag {
    /// `s(a, b)`: a ball of radius `r` centered at `c` meets `a*u + b*v = c0`
    /// iff `|a*c.x + b*c.y - c0| <= r * s(a, b)`.
    pub fn support(self, a: f64, b: f64) -> f64 {
        match self {
            NormTag::Euclidean => a.hypot(b),
            NormTag::Diamond => a.abs().max(b.abs()),
            NormTag::Square => a.abs() + b.abs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub center: Point,
    pub radius: f64,
    /// Indices of the lines whose constraints define the optimum (at most 3).
    pub active_constraints: Vec<usize>,
}

impl LpSolution {
    /// Largest constraint violation at `(center, radius)`; non-positive when feasible.
    pub fn max_violation(&self, lines: &[Line], norm: NormTag) -> f64 {
        max_violation(lines, norm, self.center, self.radius)
    }
}

fn max_violation(lines: &[Line], norm: NormTag, c: Point, r: f64) -> f64 {
    lines
        .iter()
        .map(|l| (l.a * c.x + l.b * c.y - l.c).abs() - r * norm.support(l.a, l.b))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Smallest ball of the given family meeting every line.
///
/// Minimizes `r` subject to `|a_i x + b_i y - c_i| <= r * s_i` by enumerating
/// every basis of three tight constraints (or two lines meeting at `r = 0`).
/// Among optimal bases the lexicographically smallest center wins. When all
/// lines are parallel the optimal centers form a line; the one nearest the
/// origin is returned.
pub fn lp_min_radius(lines: &[Line], norm: NormTag) -> Result<LpSolution> {
    if lines.is_empty() {
        return Err(Error::NoLines);
    }
    if lines.iter().any(|l| !(l.a.is_finite() && l.b.is_finite() && l.c.is_finite())) {
        return Err(Error::InvalidArgument("non-finite line coefficients".into()));
    }
    let scale = 1.0 + lines.iter().map(|l| l.c.abs()).fold(0.0, f64::max);
    let feas_tol = 1e-9 * scale;

    if let Some(sol) = parallel_family(lines, norm) {
        return Ok(sol);
    }

    let m = lines.len();
    let mut best: Option<LpSolution> = None;
    let mut consider = |center: Point, radius: f64, basis: &[usize]| {
        if !(center.is_finite() && radius.is_finite()) || radius < -feas_tol {
            return;
        }
        let radius = radius.max(0.0);
        if max_violation(lines, norm, center, radius) > feas_tol {
            return;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                let eps = 1e-12 * scale;
                radius < b.radius - eps
                    || (radius <= b.radius + eps
                        && (center.x, center.y) < (b.center.x, b.center.y))
            }
        };
        if better {
            let mut active = basis.to_vec();
            active.sort_unstable();
            active.dedup();
            best = Some(LpSolution {
                center,
                radius,
                active_constraints: active,
            });
        }
    };

    // r = 0: two lines through a common point.
    for i in 0..m {
        for j in i + 1..m {
            if let Some(c) = intersect(&lines[i], &lines[j]) {
                consider(c, 0.0, &[i, j]);
            }
        }
    }
    // Three tight constraints sigma * (a x + b y - c) = r * s.
    let rows: Vec<[f64; 4]> = lines
        .iter()
        .flat_map(|l| {
            let s = norm.support(l.a, l.b);
            [1.0, -1.0].map(move |sg| [sg * l.a, sg * l.b, -s, sg * l.c])
        })
        .collect();
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                for mask in 0..8 {
                    let pick = |line: usize, bit: usize| rows[2 * line + ((mask >> bit) & 1)];
                    let sys = [pick(i, 0), pick(j, 1), pick(l, 2)];
                    if let Some([x, y, r]) = solve3(sys) {
                        consider(Point::new(x, y), r, &[i, j, l]);
                    }
                }
            }
        }
    }
    best.ok_or_else(|| Error::Degenerate("no feasible basis found".into()))
}

/// Optimum when every line has (up to sign) the same normal.
fn parallel_family(lines: &[Line], norm: NormTag) -> Option<LpSolution> {
    let n0 = lines[0].normal();
    let mut offsets = Vec::with_capacity(lines.len());
    for l in lines {
        let n = l.normal();
        if n.cross(n0).abs() > 1e-12 {
            return None;
        }
        offsets.push(if n.dot(n0) >= 0.0 { l.c } else { -l.c });
    }
    let (lo_idx, lo) = offsets
        .iter()
        .copied()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))?;
    let (hi_idx, hi) = offsets
        .iter()
        .copied()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(&b.1))?;
    let s = norm.support(n0.x, n0.y);
    let mut active = vec![lo_idx, hi_idx];
    active.sort_unstable();
    active.dedup();
    Some(LpSolution {
        center: n0 * (0.5 * (lo + hi)),
        radius: 0.5 * (hi - lo) / s,
        active_constraints: active,
    })
}

fn intersect(l1: &Line, l2: &Line) -> Option<Point> {
    let det = l1.a * l2.b - l1.b * l2.a;
    if det.abs() < 1e-12 {
        return None;
    }
    Some(Point::new(
        (l1.c * l2.b - l1.b * l2.c) / det,
        (l1.a * l2.c - l1.c * l2.a) / det,
    ))
}

/// Solves the 3x3 system with augmented rows `[a, b, c | d]` by Cramer's rule.
fn solve3(m: [[f64; 4]; 3]) -> Option<[f64; 3]> {
    let det3 = |c0: usize, c1: usize, c2: usize| {
        m[0][c0] * (m[1][c1] * m[2][c2] - m[1][c2] * m[2][c1])
            - m[0][c1] * (m[1][c0] * m[2][c2] - m[1][c2] * m[2][c0])
            + m[0][c2] * (m[1][c0] * m[2][c1] - m[1][c1] * m[2][c0])
    };
    let det = det3(0, 1, 2);
    if det.abs() < 1e-12 {
        return None;
    }
    Some([det3(3, 1, 2) / det, det3(0, 3, 2) / det, det3(0, 1, 3) / det])
}

/// Exact yolk of `points` in the given ball family.
///
/// A ball `c + r*B` meets every median line iff for every unit normal `n`,
/// `n·c + r*h_B(n) >= s(n)`, where `s(n)` is the `⌈n/2⌉`-th largest of the
/// projections `n·p`. `s` follows a single voter between consecutive angles
/// at which two voters project equally, so the condition splits into finitely
/// many arcs. Candidate centers come from every basis of tight arc-endpoint
/// constraints (plus, for disks, "contains voter" constraints, which bind when
/// a whole pencil of median lines through a voter must be met); the answer is
/// the candidate needing the least radius, evaluated exactly.
///
/// The LP over the limiting median lines alone ([`lp_min_radius`]) is exact
/// only in special cases: with an even number of voters, median lines through
/// a single voter can dominate. Its center is always among the candidates.
///
/// `active_constraints` lists the limiting median lines (indices into
/// [`limiting_median_lines`]) that are tight at the solution, at most three.
pub fn yolk_bruteforce(points: &PointSet, norm: NormTag) -> Result<LpSolution> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    if n > MAX_ORACLE_POINTS {
        return Err(Error::TooManyPoints {
            got: n,
            limit: MAX_ORACLE_POINTS,
        });
    }
    let level = Level::new(points, norm);
    let rows = level.rows();

    let mut best: Option<(Point, f64)> = None;
    let mut consider = |c: Point| {
        if !c.is_finite() {
            return;
        }
        let r = level.required_radius(c);
        let better = match best {
            None => true,
            Some((bc, br)) => {
                let eps = 1e-12 * (1.0 + br);
                r < br - eps || (r <= br + eps && (c.x, c.y) < (bc.x, bc.y))
            }
        };
        if better {
            best = Some((c, r));
        }
    };

    let lines = limiting_median_lines(points)?;
    if !lines.is_empty() {
        consider(lp_min_radius(&lines, norm)?.center);
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            // r = 0: two tight rows.
            let (a, b) = (&rows[i], &rows[j]);
            let det = a.n.x * b.n.y - a.n.y * b.n.x;
            if det.abs() > 1e-12 {
                consider(Point::new(
                    (a.s * b.n.y - a.n.y * b.s) / det,
                    (a.n.x * b.s - a.s * b.n.x) / det,
                ));
            }
            for l in j + 1..rows.len() {
                let c = &rows[l];
                let sys = [a, b, c].map(|row| [row.n.x, row.n.y, row.h, row.s]);
                if let Some([x, y, _]) = solve3(sys) {
                    consider(Point::new(x, y));
                }
            }
        }
    }
    if norm == NormTag::Euclidean {
        for c in cone_candidates(&level.voters(), &rows) {
            consider(c);
        }
    }

    let (center, radius) = best.ok_or_else(|| Error::Degenerate("no candidate center".into()))?;
    let mut active: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| ((l.a * center.x + l.b * center.y - l.c).abs() - radius * norm.support(l.a, l.b)).abs() <= 1e-9)
        .map(|(i, _)| i)
        .take(3)
        .collect();
    active.sort_unstable();
    Ok(LpSolution {
        center,
        radius,
        active_constraints: active,
    })
}

/// One constraint `n·c + h*r >= s` at a fixed normal.
#[derive(Debug, Clone, Copy)]
struct Row {
    n: Point,
    h: f64,
    s: f64,
}

/// An arc of normal angles on which one voter realizes the level and the
/// ball's support function is linear.
#[derive(Debug, Clone, Copy)]
struct Arc {
    start: f64,
    end: f64,
    voter: usize,
}

/// The `⌈n/2⌉`-th largest projection as a function of the normal angle.
struct Level<'a> {
    points: &'a [Point],
    rank: usize,
    norm: NormTag,
    arcs: Vec<Arc>,
}

fn normal_at(theta: f64) -> Point {
    Point::new(theta.sin(), theta.cos())
}

impl<'a> Level<'a> {
    fn new(set: &'a PointSet, norm: NormTag) -> Self {
        let points = set.points();
        let rank = points.len().div_ceil(2);
        // Multiples of π/4 are where the L1 and L∞ support functions switch.
        let forced: Vec<f64> = (0..8).map(|j| j as f64 * PI / 4.0).collect();
        let mut cuts = forced.clone();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d = points[j] - points[i];
                let base = d.x.atan2(d.y);
                cuts.push((base + PI / 2.0).rem_euclid(2.0 * PI));
                cuts.push((base - PI / 2.0).rem_euclid(2.0 * PI));
            }
        }
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let mut level = Level {
            points,
            rank,
            norm,
            arcs: Vec::with_capacity(cuts.len()),
        };
        for (i, &start) in cuts.iter().enumerate() {
            let end = if i + 1 < cuts.len() { cuts[i + 1] } else { cuts[0] + 2.0 * PI };
            let voter = level.voter_at(0.5 * (start + end));
            // Merge with the previous arc unless a support switch separates them.
            match level.arcs.last_mut() {
                Some(prev) if prev.voter == voter && !forced.contains(&start) => prev.end = end,
                _ => level.arcs.push(Arc { start, end, voter }),
            }
        }
        level
    }

    fn voter_at(&self, theta: f64) -> usize {
        let n = normal_at(theta);
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        idx.sort_by(|&a, &b| n.dot(self.points[b]).total_cmp(&n.dot(self.points[a])));
        idx[self.rank - 1]
    }

    fn rows(&self) -> Vec<Row> {
        self.arcs
            .iter()
            .map(|a| {
                let n = normal_at(a.start);
                Row {
                    n,
                    h: self.norm.support(n.x, n.y),
                    s: n.dot(self.points[a.voter]),
                }
            })
            .collect()
    }

    fn voters(&self) -> Vec<Point> {
        let mut v: Vec<usize> = self.arcs.iter().map(|a| a.voter).collect();
        v.sort_unstable();
        v.dedup();
        v.into_iter().map(|i| self.points[i]).collect()
    }

    /// Smallest `r` with `c + r*B` meeting every median line.
    fn required_radius(&self, c: Point) -> f64 {
        let mut r: f64 = 0.0;
        for a in &self.arcs {
            let p = self.points[a.voter];
            for t in [a.start, a.end] {
                let n = normal_at(t);
                r = r.max(n.dot(p - c) / self.norm.support(n.x, n.y));
            }
            // For disks the worst normal on the arc may be interior: the one
            // pointing from c to the voter.
            if self.norm == NormTag::Euclidean {
                let d = p - c;
                let t = d.x.atan2(d.y).rem_euclid(2.0 * PI);
                let inside = (t - a.start).rem_euclid(2.0 * PI) < a.end - a.start;
                if inside {
                    r = r.max(d.norm());
                }
            }
        }
        r
    }
}

/// Disk centers where some "contains voter" constraint `|c - p| <= r` is
/// tight, combined with up to two tight rows (whose `h` is 1).
fn cone_candidates(voters: &[Point], rows: &[Row]) -> Vec<Point> {
    let mut out = Vec::new();
    let m = voters.len();
    for (i, &p) in voters.iter().enumerate() {
        out.push(p);
        for &q in &voters[i + 1..] {
            out.push((p + q) * 0.5);
        }
        // One row: c = p + t*n with t = r.
        for row in rows {
            let t = 0.5 * (row.s - row.n.dot(p));
            if t > 0.0 {
                out.push(p + row.n * t);
            }
        }
        // Two rows: n_i·c + r = s_i fixes c = c0 + r*d.
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                let (ra, rb) = (&rows[a], &rows[b]);
                let det = ra.n.x * rb.n.y - ra.n.y * rb.n.x;
                if det.abs() < 1e-12 {
                    continue;
                }
                let solve = |sa: f64, sb: f64| Point::new((sa * rb.n.y - ra.n.y * sb) / det, (ra.n.x * sb - sa * rb.n.x) / det);
                let c0 = solve(ra.s, rb.s);
                let d = solve(-1.0, -1.0);
                let w = c0 - p;
                for r in quadratic_roots(d.dot(d) - 1.0, 2.0 * d.dot(w), w.dot(w)) {
                    if r >= 0.0 {
                        out.push(c0 + d * r);
                    }
                }
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let (p, q) = (voters[i], voters[j]);
            let mid = (p + q) * 0.5;
            let half = p.distance(q) * 0.5;
            let Some(e) = (q - p).normalized().map(Point::perp_ccw) else {
                continue;
            };
            // Two voters and one row: c = mid + t*e, r^2 = half^2 + t^2.
            for row in rows {
                let a = row.s - row.n.dot(mid);
                let b = row.n.dot(e);
                for t in quadratic_roots(b * b - 1.0, -2.0 * a * b, a * a - half * half) {
                    if a - b * t >= 0.0 {
                        out.push(mid + e * t);
                    }
                }
            }
            for &o in &voters[j + 1..] {
                if let Some(c) = circumcenter(p, q, o) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a.abs() < 1e-14 {
        return if b.abs() < 1e-14 { vec![] } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    let sq = disc.sqrt();
    vec![(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
}

fn circumcenter(a: Point, b: Point, c: Point) -> Option<Point> {
    let (ab, ac) = (b - a, c - a);
    let det = 2.0 * ab.cross(ac);
    if det.abs() < 1e-14 {
        return None;
    }
    let (lb, lc) = (ab.dot(ab), ac.dot(ac));
    Some(a + Point::new(ac.y * lb - ab.y * lc, ab.x * lc - ac.x * lb) * (1.0 / det))
}

/// Reference decision: does `P_k(r, x, y)` meet every median line?
///
/// For each point and each polygon vertex, the two normals perpendicular to
/// the segment joining them are candidate breakpoints of the halfplane count.
/// The count is evaluated at every candidate angle, between consecutive
/// candidates, and at the top tangent.
pub fn decide_bruteforce(params: &PolygonParams, points: &PointSet) -> Result<bool> {
    params.validate()?;
    let PolygonParams { k, r, x, y } = *params;
    let verts: Vec<Point> = (0..k)
        .map(|i| {
            let a = PI / 2.0 - 2.0 * PI * i as f64 / k as f64;
            Point::new(x + r * a.cos(), y + r * a.sin())
        })
        .collect();

    // Angles are clockwise from straight up: normal = (sin t, cos t).
    let mut angles = vec![0.0];
    for &p in points.iter() {
        for &v in &verts {
            let d = p - v;
            if d.norm() == 0.0 {
                continue;
            }
            // Normal perpendicular to d: clockwise angle of d, plus or minus a quarter turn.
            let base = d.x.atan2(d.y);
            for t in [base + PI / 2.0, base - PI / 2.0] {
                angles.push(t.rem_euclid(2.0 * PI));
            }
        }
    }
    angles.sort_by(f64::total_cmp);
    angles.dedup();
    let mut probes = angles.clone();
    for w in angles.windows(2) {
        probes.push(0.5 * (w[0] + w[1]));
    }
    probes.push(0.5 * (angles[angles.len() - 1] + angles[0] + 2.0 * PI));

    let n = points.len();
    Ok(probes.iter().all(|&t| {
        let normal = Point::new(t.sin(), t.cos());
        let support = verts.iter().map(|v| normal.dot(*v)).fold(f64::NEG_INFINITY, f64::max);
        let count = points.iter().filter(|p| normal.dot(**p) - support > 1e-12).count();
        2 * count < n
    }))
}
