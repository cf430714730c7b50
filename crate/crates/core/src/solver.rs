//! Yolk computation: binary search on the radius at a fixed center, nested
//! golden-section search over the center.
//!
//! `f(x, y)`, the smallest feasible circumradius at center `(x, y)`, is convex
//! because the feasible set of `(r, x, y)` is convex. Minimizing it over `y`
//! for fixed `x` leaves a convex function of `x`, so two nested 1-D searches
//! reach the global minimum.

use std::cell::Cell;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::decision::Decider;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::median::PointSet;

/// Smallest accepted `ε`; `choose_k` grows like `π/ε`.
pub const MIN_EPSILON: f64 = 1e-6;

const MAX_ITERATIONS: usize = 200;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Metric {
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "l2")]
    L2Approx,
    #[serde(rename = "linf")]
    Linf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YolkResult {
    pub metric: Metric,
    pub center: Point,
    /// Radius in the metric's own ball family. For `L2Approx` this is the
    /// circumradius of the k-gon, an upper bound within `1 + ε` of the yolk.
    pub radius: f64,
    pub k_used: usize,
    pub epsilon: Option<f64>,
    pub tolerance: f64,
    pub decisions_evaluated: u64,
    /// Circumradius of the polygon actually decided on. Differs from `radius`
    /// only for `Linf`, where it is `radius * √2`.
    pub circumradius: f64,
}

/// Polygon side count for a `(1 + ε)`-approximation of the L2 yolk.
pub fn choose_k(epsilon: f64) -> Result<usize> {
    if !(epsilon.is_finite() && epsilon >= MIN_EPSILON) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be finite and at least {MIN_EPSILON}, got {epsilon}"
        )));
    }
    Ok(((PI * (1.0 + 1.0 / epsilon)).ceil() as usize).max(3))
}

/// Smallest circumradius `r` (within `tol`) such that `P_k(r, x, y)` meets
/// every median line of `points`.
pub fn min_radius_at(x: f64, y: f64, k: usize, points: &PointSet, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidArgument("non-finite center".into()));
    }
    let search = Search::new(Decider::new(k, points)?, tol);
    Ok(search.min_radius(Point::new(x, y)))
}

/// Yolk of `points` under `metric`. `epsilon` is required for `L2Approx` and
/// ignored otherwise.
pub fn yolk(points: &PointSet, metric: Metric, epsilon: Option<f64>, tol: f64) -> Result<YolkResult> {
    check_tol(tol)?;
    let (k, epsilon) = match metric {
        Metric::L2Approx => {
            let eps = epsilon.ok_or_else(|| Error::InvalidArgument("L2 metric needs epsilon".into()))?;
            (choose_k(eps)?, Some(eps))
        }
        Metric::L1 | Metric::Linf => (4, None),
    };

    // The L∞ ball is the axis-parallel square; P_4 is a diamond. Solving on
    // the point set turned an eighth of a turn clockwise maps one onto the
    // other.
    let rotated;
    let working = if metric == Metric::Linf {
        rotated = points.map(|p| p.rotated(-FRAC_PI_4))?;
        &rotated
    } else {
        points
    };

    let search = Search::new(Decider::new(k, working)?, tol);
    let (center, circumradius) = search.minimize();
    let (center, radius) = match metric {
        Metric::Linf => (center.rotated(FRAC_PI_4), circumradius * FRAC_1_SQRT_2),
        _ => (center, circumradius),
    };
    Ok(YolkResult {
        metric,
        center,
        radius,
        k_used: k,
        epsilon,
        tolerance: tol,
        decisions_evaluated: search.calls.get(),
        circumradius,
    })
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")))
    }
}

struct Search<'a> {
    decider: Decider<'a>,
    tol: f64,
    /// `1 / cos(π/k)`: a k-gon of circumradius `r` contains the disk of radius
    /// `r * cos(π/k)`.
    sec: f64,
    calls: Cell<u64>,
}

impl<'a> Search<'a> {
    fn new(decider: Decider<'a>, tol: f64) -> Self {
        let sec = 1.0 / (PI / decider.k() as f64).cos();
        Search {
            decider,
            tol,
            sec,
            calls: Cell::new(0),
        }
    }

    fn decide(&self, r: f64, c: Point) -> bool {
        self.calls.set(self.calls.get() + 1);
        self.decider.decide(r, c.x, c.y)
    }

    fn min_radius(&self, c: Point) -> f64 {
        let points = self.decider.points();
        // Polygons containing the disk around c through the farthest point
        // contain the convex hull, which every median line meets.
        let mut hi = (points.farthest_distance_from(c) + points.diameter_bound()) * self.sec;
        if self.decide(0.0, c) {
            return 0.0;
        }
        while !self.decide(hi, c) {
            hi = 2.0 * hi + self.tol;
        }
        let mut lo = 0.0;
        for _ in 0..MAX_ITERATIONS {
            if hi - lo <= self.tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.decide(mid, c) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Global minimizer of `min_radius` and its value.
    fn minimize(&self) -> (Point, f64) {
        let points = self.decider.points();
        let (lo, hi) = points.bounding_box();
        let mid = (lo + hi) * 0.5;
        // An optimal center lies within half the box diagonal plus the largest
        // possible optimal circumradius of the box center.
        let d = lo.distance(hi);
        let half = d * (0.5 + self.sec);
        let mut best = (mid, f64::INFINITY);
        let mut consider = |c: Point, r: f64| {
            if r < best.1 {
                best = (c, r);
            }
        };
        let outer = |x: f64, consider: &mut dyn FnMut(Point, f64)| {
            let inner = |y: f64| {
                let c = Point::new(x, y);
                let r = self.min_radius(c);
                consider(c, r);
                r
            };
            golden_min(mid.y - half, mid.y + half, self.tol, inner)
        };
        golden_min(mid.x - half, mid.x + half, self.tol, |x| outer(x, &mut consider));
        best
    }
}

/// Golden-section search for the minimum of a convex `f` on `[a, b]`,
/// returning the smallest value seen.
fn golden_min(mut a: f64, mut b: f64, tol: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
    if b - a <= tol {
        return f(0.5 * (a + b));
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = fc.min(fd);
    for _ in 0..MAX_ITERATIONS {
        if b - a <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
            best = best.min(fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
            best = best.min(fd);
        }
    }
    best
}
