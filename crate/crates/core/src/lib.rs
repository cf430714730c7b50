//! Yolk computation for planar point sets.
//!
//! The yolk of a point set `V` is the smallest ball meeting every median line
//! of `V`. This crate decides whether a regular polygon `P_k(r, x, y)` meets
//! every median line with a rotating-tangent sweep that never enumerates median
//! lines, minimizes the polygon radius on top of that decision, and specializes
//! the result to the L1 and L∞ yolks (`k = 4`) and to a `(1 + ε)`-approximate
//! L2 yolk. A brute-force oracle built on limiting median lines and a small LP
//! provides independent ground truth.

pub mod decision;
pub mod error;
pub mod geometry;
pub mod median;
pub mod oracle;
pub mod solver;

pub use decision::{decide, decide_with_trace, sweep_events, sweep_profile, DecisionTrace, EventKind, SweepEvent, SweepProfile};
pub use error::{Error, Result};
pub use geometry::{Line, Point, PolygonParams};
pub use median::{is_median_line, limiting_median_lines, PointSet};
pub use oracle::{decide_bruteforce, lp_min_radius, yolk_bruteforce, LpSolution, NormTag};
pub use solver::{choose_k, min_radius_at, yolk, Metric, YolkResult};
