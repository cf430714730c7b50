//! Planar primitives shared by the decision sweep, the solver and the oracle.
//!
//! The polygon family is the regular `k`-gon `P_k(r, x, y)`: circumradius `r`,
//! center `(x, y)`, vertex 0 at the top of the circumcircle and vertex indices
//! advancing clockwise.

mod hyperplane;
mod polygon;
mod tangent;

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use hyperplane::{critical_hyperplane, hyperplane_side, ComparisonLog, CriticalHyperplane, TracedComparison};
pub use polygon::{classify_point, classify_point_traced, polygon_vertex, tangent_vertices, Location, TangentPair};
pub use tangent::{tangent_order, tangent_order_traced, Region, TangentCase, TangentId, TangentOrder};

pub(crate) use hyperplane::Tracer;
pub(crate) use polygon::{locate, tangent_pair_at};

/// Absolute signed-distance tolerance for every geometric side test.
pub const GEOM_TOL: f64 = 1e-12;

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// z-component of the 3D cross product; positive when `other` is
    /// counterclockwise of `self`.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(Point::new(self.x / n, self.y / n))
        } else {
            None
        }
    }

    /// Rotation by `angle` radians, counterclockwise.
    pub fn rotated(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// The vector rotated a quarter turn clockwise.
    #[inline]
    pub fn perp_cw(self) -> Point {
        Point::new(self.y, -self.x)
    }

    /// The vector rotated a quarter turn counterclockwise.
    #[inline]
    pub fn perp_ccw(self) -> Point {
        Point::new(-self.y, self.x)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Clockwise angle of `d` measured from the upward direction, in `[0, 2π)`.
pub fn clockwise_angle_from_up(d: Point) -> f64 {
    let a = d.x.atan2(d.y);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Parameters `(k, r, x, y)` of the regular polygon `P_k(r, x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolygonParams {
    pub k: usize,
    pub r: f64,
    pub x: f64,
    pub y: f64,
}

impl PolygonParams {
    pub fn new(k: usize, r: f64, x: f64, y: f64) -> Result<Self> {
        let params = PolygonParams { k, r, x, y };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 3 {
            return Err(Error::InvalidPolygon(format!("side count {} < 3", self.k)));
        }
        if !(self.r.is_finite() && self.x.is_finite() && self.y.is_finite()) {
            return Err(Error::InvalidPolygon("non-finite parameter".into()));
        }
        if self.r < 0.0 {
            return Err(Error::InvalidPolygon(format!("negative radius {}", self.r)));
        }
        Ok(())
    }

    #[inline]
    pub fn center(&self) -> Point {
        Point::new(self.x, self.y)
    }

    /// Same polygon family and center, different circumradius.
    pub fn with_radius(&self, r: f64) -> Self {
        PolygonParams { r, ..*self }
    }
}

/// Direction tables of `P_k(1, 0, 0)`, shared by every probe against a polygon
/// with the same side count.
#[derive(Debug, Clone)]
pub struct UnitPolygon {
    k: usize,
    /// `vertex[i]` is vertex `i` of the unit polygon.
    vertex: Vec<Point>,
    /// Unit direction of edge `i`, from vertex `i` to vertex `i + 1`.
    edge: Vec<Point>,
}

impl UnitPolygon {
    pub fn new(k: usize) -> Self {
        assert!(k >= 3, "regular polygon needs at least three sides");
        let vertex: Vec<Point> = (0..k)
            .map(|i| {
                let a = 2.0 * PI * i as f64 / k as f64;
                Point::new(a.sin(), a.cos())
            })
            .collect();
        let edge = (0..k)
            .map(|i| {
                (vertex[(i + 1) % k] - vertex[i])
                    .normalized()
                    .expect("distinct unit vertices")
            })
            .collect();
        UnitPolygon { k, vertex, edge }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.vertex[i % self.k]
    }

    #[inline]
    pub fn edge(&self, i: usize) -> Point {
        self.edge[i % self.k]
    }

    /// Number of vertices whose clockwise angle from the top is below π.
    #[inline]
    pub(crate) fn right_half_len(&self) -> usize {
        self.k.div_ceil(2)
    }
}

/// A polygon instance together with its direction tables.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frame<'a> {
    pub params: PolygonParams,
    pub unit: &'a UnitPolygon,
}

impl<'a> Frame<'a> {
    pub fn new(params: PolygonParams, unit: &'a UnitPolygon) -> Self {
        debug_assert_eq!(params.k, unit.k());
        Frame { params, unit }
    }

    #[inline]
    pub fn center(&self) -> Point {
        self.params.center()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.center() + self.unit.vertex(i) * self.params.r
    }

    /// Side of `p` relative to the line with direction `dir` through
    /// `center + r * offset`; `Above` means `p` is to the left of `dir`.
    pub fn probe(&self, tracer: &mut Tracer, dir: Point, offset: Point, p: Point) -> Side {
        let anchor = Point::new(
            self.params.x + self.params.r * offset.x,
            self.params.y + self.params.r * offset.y,
        );
        let side = Side::of(dir.cross(p - anchor));
        tracer.record(|| CriticalHyperplane::from_direction(dir, offset, p), side);
        side
    }
}

/// Three-way outcome of a tolerance-aware sign test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Above,
    On,
    Below,
}

impl Side {
    #[inline]
    pub fn of(value: f64) -> Side {
        if value > GEOM_TOL {
            Side::Above
        } else if value < -GEOM_TOL {
            Side::Below
        } else {
            Side::On
        }
    }
}

/// An undirected line `a*u + b*v = c` with `(a, b)` a unit vector whose first
/// non-negligible component is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line {
    /// Normalizes an arbitrary implicit form; `None` if `(a, b)` vanishes.
    pub fn new(a: f64, b: f64, c: f64) -> Option<Line> {
        let n = a.hypot(b);
        if !(n > 0.0 && n.is_finite() && c.is_finite()) {
            return None;
        }
        let (mut a, mut b, mut c) = (a / n, b / n, c / n);
        if a < -GEOM_TOL || (a.abs() <= GEOM_TOL && b < 0.0) {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(Line { a, b, c })
    }

    /// The line through two distinct points.
    pub fn through(p: Point, q: Point) -> Option<Line> {
        let d = q - p;
        let normal = d.perp_ccw();
        Line::new(normal.x, normal.y, normal.dot(p))
    }

    #[inline]
    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    /// Signed Euclidean distance of `p`; positive on the side the normal points to.
    #[inline]
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y - self.c
    }

    /// Same line with the normal orientation reversed (not canonical).
    pub fn flipped(&self) -> Line {
        Line {
            a: -self.a,
            b: -self.b,
            c: -self.c,
        }
    }

    pub fn approx_eq(&self, other: &Line, tol: f64) -> bool {
        (self.a - other.a).abs() <= tol && (self.b - other.b).abs() <= tol && (self.c - other.c).abs() <= tol
    }
}
