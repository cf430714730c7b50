//! Relative clockwise order of the four tangents drawn from two external
//! points to `P_k(r, x, y)`.
//!
//! The two supporting lines parallel to `pq` touch vertices `i` and `j`. They
//! and the chord `ij` cut the plane into four regions: `L` and `R` outside the
//! strip between the tangents, `U` and `D` inside the strip on either side of
//! the chord. "Up" is the direction from `q` to `p`. The regions of `p` and `q`
//! alone determine the cyclic order of the four tangents.

use serde::{Deserialize, Serialize};

use super::{locate, ComparisonLog, Frame, Location, Point, PolygonParams, Side, Tracer, UnitPolygon};
use crate::error::{Error, Result};

/// One of the four tangents: the entry or exit tangent from `p` or `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TangentId {
    PEntry,
    PExit,
    QEntry,
    QExit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    Left,
    Right,
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TangentCase {
    BothLeft,
    BothRight,
    BothUp,
    BothDown,
    UpDown,
}

impl TangentCase {
    /// Clockwise order of the tangents for this case.
    pub fn order(self) -> [TangentId; 4] {
        use TangentId::*;
        match self {
            TangentCase::BothLeft => [QEntry, PEntry, QExit, PExit],
            TangentCase::BothRight => [PEntry, QEntry, PExit, QExit],
            TangentCase::BothUp => [PEntry, QEntry, QExit, PExit],
            TangentCase::BothDown => [QEntry, PEntry, PExit, QExit],
            TangentCase::UpDown => [PEntry, PExit, QEntry, QExit],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentOrder {
    pub case: TangentCase,
    pub p_region: Region,
    pub q_region: Region,
    /// Cyclic clockwise order; only the rotation class is meaningful.
    pub order: [TangentId; 4],
}

impl TangentOrder {
    /// The cyclic order rotated to begin at `first`.
    pub fn starting_at(&self, first: TangentId) -> [TangentId; 4] {
        let start = self
            .order
            .iter()
            .position(|&t| t == first)
            .expect("every tangent appears once");
        std::array::from_fn(|i| self.order[(start + i) % 4])
    }
}

pub fn tangent_order(p: Point, q: Point, params: &PolygonParams) -> Result<TangentOrder> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    order_in(Frame::new(*params, &unit), p, q, &mut Tracer::off())
}

/// [`tangent_order`] plus the log of every parameter-dependent comparison.
pub fn tangent_order_traced(p: Point, q: Point, params: &PolygonParams) -> Result<(TangentOrder, ComparisonLog)> {
    params.validate()?;
    let unit = UnitPolygon::new(params.k);
    let mut tracer = Tracer::on();
    let order = order_in(Frame::new(*params, &unit), p, q, &mut tracer)?;
    Ok((order, tracer.into_log()))
}

fn order_in(frame: Frame<'_>, p: Point, q: Point, tracer: &mut Tracer) -> Result<TangentOrder> {
    let up = (p - q).normalized().ok_or(Error::CoincidentPoints)?;
    for s in [p, q] {
        if locate(frame, s, tracer).0 != Location::Outside {
            return Err(Error::NotOutside(format!("{s}")));
        }
    }

    let unit = frame.unit;
    let normal = up.perp_ccw();
    let i = extreme_vertex(unit, normal);
    let j = extreme_vertex(unit, -normal);
    let mut chord = (unit.vertex(j) - unit.vertex(i))
        .normalized()
        .ok_or_else(|| Error::Degenerate("tangent vertices coincide".into()))?;
    if chord.perp_ccw().dot(up) < 0.0 {
        chord = -chord;
    }

    let mut region_of = |s: Point| -> Result<Region> {
        let left_i = frame.probe(tracer, up, unit.vertex(i), s);
        let left_j = frame.probe(tracer, up, unit.vertex(j), s);
        match (left_i, left_j) {
            (Side::Above, Side::Above) => Ok(Region::Left),
            (Side::Below, Side::Below) => Ok(Region::Right),
            (Side::Above, Side::Below) | (Side::Below, Side::Above) => {
                match frame.probe(tracer, chord, unit.vertex(i), s) {
                    Side::Above => Ok(Region::Up),
                    Side::Below => Ok(Region::Down),
                    Side::On => Err(Error::Degenerate(format!("{s} lies on the chord"))),
                }
            }
            _ => Err(Error::Degenerate(format!("{s} lies on a tangent parallel to pq"))),
        }
    };
    let p_region = region_of(p)?;
    let q_region = region_of(q)?;

    let case = match (p_region, q_region) {
        (Region::Left, Region::Left) => TangentCase::BothLeft,
        (Region::Right, Region::Right) => TangentCase::BothRight,
        (Region::Up, Region::Up) => TangentCase::BothUp,
        (Region::Down, Region::Down) => TangentCase::BothDown,
        (Region::Up, Region::Down) => TangentCase::UpDown,
        (a, b) => {
            return Err(Error::Degenerate(format!(
                "inconsistent regions {a:?}/{b:?}"
            )))
        }
    };
    Ok(TangentOrder {
        case,
        p_region,
        q_region,
        order: case.order(),
    })
}

/// Index of the unit-polygon vertex maximizing the dot product with `dir`,
/// found by a binary search over vertex directions. Independent of `(r, x, y)`.
fn extreme_vertex(unit: &UnitPolygon, dir: Point) -> usize {
    let k = unit.k();
    let probe_frame = Frame::new(PolygonParams { k, r: 1.0, x: 0.0, y: 0.0 }, unit);
    let mut off = Tracer::off();
    let (_, wedge) = locate(probe_frame, dir, &mut off);
    // Past the outward normal of edge `wedge` means vertex `wedge + 1` is closer.
    let edge_normal = unit.edge(wedge).perp_ccw();
    if edge_normal.cross(dir) < 0.0 {
        (wedge + 1) % k
    } else {
        wedge
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TangentId::*;

    fn sq() -> PolygonParams {
        PolygonParams::new(4, 1.0, 0.0, 0.0).unwrap()
    }

    #[test]
    fn up_down_case() {
        let o = tangent_order(Point::new(0.0, 3.0), Point::new(0.0, -3.0), &sq()).unwrap();
        assert_eq!(o.case, TangentCase::UpDown);
        assert_eq!(o.starting_at(PEntry), [PEntry, PExit, QEntry, QExit]);
    }

    #[test]
    fn both_left_case() {
        let o = tangent_order(Point::new(-4.0, 2.0), Point::new(-4.0, -2.0), &sq()).unwrap();
        assert_eq!(o.case, TangentCase::BothLeft);
        assert_eq!(o.order, [QEntry, PEntry, QExit, PExit]);
    }

    #[test]
    fn both_up_case() {
        let o = tangent_order(Point::new(0.0, 4.0), Point::new(0.0, 3.0), &sq()).unwrap();
        assert_eq!(o.case, TangentCase::BothUp);
        assert_eq!(o.order, [PEntry, QEntry, QExit, PExit]);
    }

    #[test]
    fn oblique_pair_beyond_the_strip_is_right() {
        // pq is steep enough that both points lie right of both parallel tangents.
        let o = tangent_order(Point::new(0.0, 4.0), Point::new(0.5, 3.2), &sq()).unwrap();
        assert_eq!((o.p_region, o.q_region), (Region::Right, Region::Right));
        assert_eq!(o.order, [PEntry, QEntry, PExit, QExit]);
    }

    #[test]
    fn both_down_case() {
        let o = tangent_order(Point::new(0.0, -3.0), Point::new(0.0, -4.0), &sq()).unwrap();
        assert_eq!(o.case, TangentCase::BothDown);
        assert_eq!(o.order, [QEntry, PEntry, PExit, QExit]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            tangent_order(Point::new(0.0, 3.0), Point::new(0.0, 3.0), &sq()),
            Err(Error::CoincidentPoints)
        ));
        assert!(matches!(
            tangent_order(Point::new(0.0, 0.5), Point::new(0.0, 3.0), &sq()),
            Err(Error::NotOutside(_))
        ));
    }

    #[test]
    fn extreme_vertex_matches_argmax() {
        for k in [3usize, 4, 5, 12, 31] {
            let unit = UnitPolygon::new(k);
            for s in 0..97 {
                let dir = Point::new(1.0, 0.0).rotated(0.0713 + s as f64 * 0.0651);
                let best = (0..k)
                    .max_by(|&a, &b| unit.vertex(a).dot(dir).total_cmp(&unit.vertex(b).dot(dir)))
                    .unwrap();
                let got = extreme_vertex(&unit, dir);
                assert!((unit.vertex(got).dot(dir) - unit.vertex(best).dot(dir)).abs() < 1e-12);
            }
        }
    }
}
