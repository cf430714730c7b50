//! Median lines of a point set.
//!
//! A line is a median line when each of its two OPEN halfplanes holds at most
//! `n/2` points. Points within [`GEOM_TOL`] of the line count as on it.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Line, Point, GEOM_TOL};

/// Coordinate tolerance when merging lines found through different point pairs.
pub const LINE_DEDUP_TOL: f64 = 1e-9;

/// A non-empty set of pairwise distinct points with finite coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidPointSet(format!("non-finite coordinate in {p}")));
        }
        let mut sorted = points.clone();
        sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPointSet(format!("duplicate point {}", w[0])));
        }
        Ok(PointSet { points })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with `len`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    /// Applies `f` to every point, revalidating the result.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<PointSet> {
        PointSet::new(self.points.iter().map(|&p| f(p)).collect())
    }

    /// `(min corner, max corner)` of the axis-aligned bounding box.
    pub fn bounding_box(&self) -> (Point, Point) {
        self.points.iter().fold(
            (
                Point::new(f64::INFINITY, f64::INFINITY),
                Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
            ),
            |(lo, hi), p| {
                (
                    Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                    Point::new(hi.x.max(p.x), hi.y.max(p.y)),
                )
            },
        )
    }

    /// Upper bound on the diameter: the bounding-box diagonal.
    pub fn diameter_bound(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        lo.distance(hi)
    }

    pub fn farthest_distance_from(&self, c: Point) -> f64 {
        self.points.iter().map(|p| p.distance(c)).fold(0.0, f64::max)
    }
}

impl TryFrom<Vec<Point>> for PointSet {
    type Error = Error;
    fn try_from(points: Vec<Point>) -> Result<Self> {
        PointSet::new(points)
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(set: PointSet) -> Self {
        set.points
    }
}

/// Counts of points strictly on the positive and negative side of `line`.
pub fn side_counts(line: &Line, points: &PointSet) -> (usize, usize) {
    points.iter().fold((0, 0), |(pos, neg), &p| {
        let s = line.signed_distance(p);
        if s > GEOM_TOL {
            (pos + 1, neg)
        } else if s < -GEOM_TOL {
            (pos, neg + 1)
        } else {
            (pos, neg)
        }
    })
}

pub fn is_median_line(line: &Line, points: &PointSet) -> bool {
    let n = points.len();
    let (pos, neg) = side_counts(line, points);
    2 * pos <= n && 2 * neg <= n
}

/// All median lines through at least two points, deduplicated. Cubic time;
/// meant for small reference inputs.
pub fn limiting_median_lines(points: &PointSet) -> Result<Vec<Line>> {
    let pts = points.points();
    let n = pts.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let mut found = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let Some(line) = Line::through(pts[i], pts[j]) else {
                continue;
            };
            if is_median_line(&line, points) {
                found.push(line);
            }
        }
    }
    Ok(dedup_lines(found, LINE_DEDUP_TOL))
}

fn lex_cmp(a: &Line, b: &Line) -> Ordering {
    a.a.total_cmp(&b.a)
        .then(a.b.total_cmp(&b.b))
        .then(a.c.total_cmp(&b.c))
}

fn dedup_lines(mut lines: Vec<Line>, tol: f64) -> Vec<Line> {
    lines.sort_by(lex_cmp);
    let mut kept: Vec<Line> = Vec::with_capacity(lines.len());
    for line in lines {
        let duplicate = kept
            .iter()
            .rev()
            .take_while(|k| line.a - k.a <= tol)
            .any(|k| k.approx_eq(&line, tol));
        if !duplicate {
            kept.push(line);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pts: &[(f64, f64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn square() -> PointSet {
        set(&[(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])
    }

    #[test]
    fn point_set_validation() {
        assert!(PointSet::new(vec![]).is_err());
        assert!(PointSet::new(vec![Point::new(0.0, f64::NAN)]).is_err());
        assert!(PointSet::new(vec![Point::new(1.0, 2.0), Point::new(1.0, 2.0)]).is_err());
        assert_eq!(set(&[(0.0, 0.0), (1.0, 0.0)]).len(), 2);
    }

    #[test]
    fn median_predicate_examples() {
        let horizontal = Line::new(0.0, 1.0, 0.0).unwrap();
        assert!(is_median_line(&horizontal, &square()));

        let top = Line::through(Point::new(-1.0, 1.0), Point::new(1.0, 1.0)).unwrap();
        assert!(is_median_line(&top, &square()));

        let row = set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]);
        let x_half = Line::new(1.0, 0.0, 0.5).unwrap();
        assert!(!is_median_line(&x_half, &row));
    }

    #[test]
    fn median_predicate_ignores_orientation() {
        let l = Line::through(Point::new(-1.0, -1.0), Point::new(0.5, 1.0)).unwrap();
        assert_eq!(is_median_line(&l, &square()), is_median_line(&l.flipped(), &square()));
    }

    #[test]
    fn limiting_lines_of_square() {
        assert_eq!(limiting_median_lines(&square()).unwrap().len(), 6);
    }

    #[test]
    fn limiting_lines_of_collinear_triple() {
        let lines = limiting_median_lines(&set(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(lines[0].a.abs() < 1e-15 && (lines[0].b - 1.0).abs() < 1e-15);
    }

    #[test]
    fn limiting_lines_of_equilateral_triangle() {
        let h = 3f64.sqrt() / 2.0;
        let lines = limiting_median_lines(&set(&[(0.0, 1.0), (h, -0.5), (-h, -0.5)])).unwrap();
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn limiting_lines_need_two_points() {
        assert!(limiting_median_lines(&set(&[(0.0, 0.0)])).is_err());
    }
}
