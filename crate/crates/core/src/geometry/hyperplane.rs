//! Critical hyperplanes in `(r, x, y)` parameter space.
//!
//! Every parameter-dependent comparison made against `P_k(r, x, y)` asks on
//! which side of a line through `(x, y) + r * v` some fixed point `p` lies.
//! That sign is the sign of an affine function of `(r, x, y)`, so each such
//! comparison can be logged as a hyperplane together with the observed side.

use serde::{Deserialize, Serialize};

use super::{Point, PolygonParams, Side};

/// The hyperplane `a*x + b*y + c*r + d = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalHyperplane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CriticalHyperplane {
    /// Hyperplane for "is `p` left of the line with direction `dir` through
    /// `(x, y) + r * offset`". For `dir = (1, g)` this is exactly the
    /// gradient form produced by [`critical_hyperplane`].
    pub fn from_direction(dir: Point, offset: Point, p: Point) -> Self {
        CriticalHyperplane {
            a: dir.y,
            b: -dir.x,
            c: dir.y * offset.x - dir.x * offset.y,
            d: dir.x * p.y - dir.y * p.x,
        }
    }

    #[inline]
    pub fn eval(&self, r: f64, x: f64, y: f64) -> f64 {
        self.a * x + self.b * y + self.c * r + self.d
    }

    pub fn is_valid(&self) -> bool {
        self.a != 0.0 || self.b != 0.0 || self.c != 0.0
    }
}

/// The hyperplane `H_{p,g,v}`: its sign at `(r, x, y)` says whether `p` is
/// above (positive), on, or below (negative) the line of gradient `g` through
/// `(x, y) + r * v`.
pub fn critical_hyperplane(g: f64, v: Point, p: Point) -> CriticalHyperplane {
    CriticalHyperplane {
        a: g,
        b: -1.0,
        c: g * v.x - v.y,
        d: p.y - g * p.x,
    }
}

/// Side of the parameter point `(r, x, y)` of `params` relative to `h`.
pub fn hyperplane_side(h: &CriticalHyperplane, params: &PolygonParams) -> Side {
    Side::of(h.eval(params.r, params.x, params.y))
}

/// One parameter-dependent comparison and the outcome the algorithm observed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracedComparison {
    pub hyperplane: CriticalHyperplane,
    pub side: Side,
}

pub type ComparisonLog = Vec<TracedComparison>;

/// Optional sink for traced comparisons.
#[derive(Debug, Default)]
pub(crate) struct Tracer {
    log: Option<ComparisonLog>,
}

impl Tracer {
    pub fn off() -> Self {
        Tracer { log: None }
    }

    pub fn on() -> Self {
        Tracer { log: Some(Vec::new()) }
    }

    #[inline]
    pub fn record(&mut self, hyperplane: impl FnOnce() -> CriticalHyperplane, side: Side) {
        if let Some(log) = self.log.as_mut() {
            log.push(TracedComparison {
                hyperplane: hyperplane(),
                side,
            });
        }
    }

    pub fn into_log(self) -> ComparisonLog {
        self.log.unwrap_or_default()
    }
}
