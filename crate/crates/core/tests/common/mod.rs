//! Independent numeric helpers shared by the property and acceptance suites.
#![allow(dead_code)]

use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use yolk::geometry::TangentId;
use yolk::{Point, PointSet, PolygonParams};

/// Vertices from the circumcircle parameterization, counter-clockwise angle
/// measured from the x axis.
pub fn naive_vertices(params: &PolygonParams) -> Vec<Point> {
    (0..params.k)
        .map(|i| {
            let a = PI / 2.0 - 2.0 * PI * i as f64 / params.k as f64;
            Point::new(params.x + params.r * a.cos(), params.y + params.r * a.sin())
        })
        .collect()
}

/// Smallest signed margin of `p` against the edges, positive when outside
/// some edge. Computed from the explicit vertex list.
pub fn edge_margins(p: Point, params: &PolygonParams) -> Vec<f64> {
    let v = naive_vertices(params);
    let k = v.len();
    (0..k)
        .map(|i| {
            let a = v[i];
            let b = v[(i + 1) % k];
            let d = (b - a).normalized().unwrap_or(Point::new(1.0, 0.0));
            d.cross(p - a)
        })
        .collect()
}

pub fn normal_at(theta: f64) -> Point {
    Point::new(theta.sin(), theta.cos())
}

pub fn clockwise_angle(n: Point) -> f64 {
    n.x.atan2(n.y).rem_euclid(2.0 * PI)
}

/// `n(θ)·p - h(θ)`: positive when `p` is strictly beyond the tangent with
/// outward normal at clockwise angle `θ`.
pub fn beyond(theta: f64, p: Point, verts: &[Point]) -> f64 {
    let n = normal_at(theta);
    let h = verts.iter().map(|v| n.dot(*v)).fold(f64::NEG_INFINITY, f64::max);
    n.dot(p) - h
}

/// Normal angles `(entry, exit)` of the two tangents through `p`, found by
/// testing every vertex line for support. `None` when `p` is not clearly
/// outside or the tangents are ambiguous.
pub fn numeric_tangent_angles(p: Point, params: &PolygonParams) -> Option<(f64, f64)> {
    let verts = naive_vertices(params);
    let mut found: Vec<f64> = Vec::new();
    for &v in &verts {
        let d = p - v;
        if d.norm() < 1e-9 {
            return None;
        }
        for n in [Point::new(d.y, -d.x), Point::new(-d.y, d.x)] {
            let n = n * (1.0 / n.norm());
            let h = n.dot(v);
            if verts.iter().all(|w| n.dot(*w) <= h + 1e-12) {
                let t = clockwise_angle(n);
                if !found.iter().any(|f| cyclic_gap(*f, t) < 1e-9) {
                    found.push(t);
                }
            }
        }
    }
    if found.len() != 2 {
        return None;
    }
    let delta = 1e-7;
    let after = |t: f64| beyond(t + delta, p, &verts);
    let (a, b) = (found[0], found[1]);
    match (after(a) > 0.0, after(b) > 0.0) {
        (true, false) => Some((a, b)),
        (false, true) => Some((b, a)),
        _ => None,
    }
}

pub fn cyclic_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// Clockwise order of the four tangents by numeric angle, or `None` when two
/// angles are too close to call.
pub fn numeric_order(p: Point, q: Point, params: &PolygonParams) -> Option<[TangentId; 4]> {
    let (pe, px) = numeric_tangent_angles(p, params)?;
    let (qe, qx) = numeric_tangent_angles(q, params)?;
    let mut tagged = [
        (pe, TangentId::PEntry),
        (px, TangentId::PExit),
        (qe, TangentId::QEntry),
        (qx, TangentId::QExit),
    ];
    for i in 0..4 {
        for j in i + 1..4 {
            if cyclic_gap(tagged[i].0, tagged[j].0) < 1e-7 {
                return None;
            }
        }
    }
    tagged.sort_by(|a, b| a.0.total_cmp(&b.0));
    Some(tagged.map(|t| t.1))
}

pub fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

pub fn random_points(rng: &mut ChaCha8Rng, n: usize, half_width: f64) -> PointSet {
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(
                    rng.gen_range(-half_width..half_width),
                    rng.gen_range(-half_width..half_width),
                )
            })
            .collect();
        if let Ok(set) = PointSet::new(pts) {
            return set;
        }
    }
}

pub fn random_params(rng: &mut ChaCha8Rng, ks: &[usize], r_max: f64, center_spread: f64) -> PolygonParams {
    let k = ks[rng.gen_range(0..ks.len())];
    PolygonParams::new(
        k,
        rng.gen_range(0.0..r_max),
        rng.gen_range(-center_spread..center_spread),
        rng.gen_range(-center_spread..center_spread),
    )
    .unwrap()
}

/// Radius a ball of family `norm` at `c` needs to meet every median line,
/// estimated on `samples` evenly spaced normal directions.
pub fn sampled_required_radius(points: &PointSet, c: Point, norm: yolk::NormTag, samples: usize) -> f64 {
    let m = points.len().div_ceil(2);
    let mut proj = vec![0.0; points.len()];
    let mut worst: f64 = 0.0;
    for i in 0..samples {
        let n = normal_at(i as f64 * 2.0 * PI / samples as f64);
        for (slot, p) in proj.iter_mut().zip(points.iter()) {
            *slot = n.dot(*p);
        }
        proj.sort_by(|a, b| b.total_cmp(a));
        worst = worst.max((proj[m - 1] - n.dot(c)) / norm.support(n.x, n.y));
    }
    worst
}
