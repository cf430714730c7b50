use std::f64::consts::PI;
use std::fmt;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use yolk::decision::Decider;
use yolk::{limiting_median_lines, yolk, yolk_bruteforce, Metric, NormTag, Point, PointSet};

use crate::args::{Cli, Command, InputArgs, MetricArg, MetricArgs, OutputFormat};
use crate::generate::{generate, PRNG_NAME};
use crate::input::{self, InputFormat};
use crate::svg::{self, Ball};

/// Default instance size for `--gen` without `--n`.
const DEFAULT_GEN_N: usize = 16;
/// Limiting median lines are drawn only for inputs up to this size.
const SVG_LINE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Unreadable or invalid points, or an instance the command cannot handle.
    Input(String),
    /// Flags that parse but do not fit together.
    Usage(String),
    /// `check` found solver and reference too far apart.
    Check(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Check(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Check(m) => write!(f, "check failed: {m}"),
        }
    }
}

fn io_failure(what: &Path, e: io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", what.display()))
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub metric: Metric,
    pub center: [f64; 2],
    pub radius: f64,
    pub k_used: usize,
    pub epsilon: Option<f64>,
    pub tolerance: f64,
    pub n: usize,
    pub decisions_evaluated: u64,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub metric: Metric,
    pub norm: NormTag,
    pub center: [f64; 2],
    pub radius: f64,
    pub active_constraints: Vec<usize>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub metric: Metric,
    pub n: usize,
    pub solver_radius: f64,
    pub oracle_radius: f64,
    pub gap: f64,
    pub allowed: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
struct BenchRow {
    n: usize,
    ms: f64,
}

/// Compares a solver radius with the reference radius. L1 and L∞ must agree
/// within `10 * tol * (1 + r_ref)`; the L2 approximation must land in
/// `[r_ref, (1 + ε) r_ref]` widened by the same slack. `gap` is the distance
/// to that interval, zero when inside.
pub fn check_verdict(metric: Metric, epsilon: Option<f64>, tol: f64, n: usize, solver: f64, oracle: f64) -> CheckReport {
    let allowed = 10.0 * tol * (1.0 + oracle);
    let upper = match metric {
        Metric::L2Approx => (1.0 + epsilon.unwrap_or(0.0)) * oracle,
        _ => oracle,
    };
    let gap = if solver < oracle {
        oracle - solver
    } else {
        (solver - upper).max(0.0)
    };
    CheckReport {
        metric,
        n,
        solver_radius: solver,
        oracle_radius: oracle,
        gap,
        allowed,
        pass: gap <= allowed,
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { input, metric, svg, format } => {
            validate_metric(&metric, true)?;
            let points = load(&input)?;
            let result = yolk(&points, metric.metric.metric(), metric.epsilon, metric.tol)
                .map_err(|e| Failure::Input(e.to_string()))?;
            if let Some(path) = svg {
                let ball = match result.metric {
                    Metric::L2Approx => Ball {
                        polygon: regular_polygon(result.k_used, result.radius, result.center),
                        circle: Some((result.center, result.radius)),
                    },
                    _ => Ball { polygon: unit_ball(metric.metric.norm(), result.center, result.radius), circle: None },
                };
                write_svg(&path, &points, &ball)?;
            }
            let report = SolveReport {
                metric: result.metric,
                center: [result.center.x, result.center.y],
                radius: result.radius,
                k_used: result.k_used,
                epsilon: result.epsilon,
                tolerance: result.tolerance,
                n: points.len(),
                decisions_evaluated: result.decisions_evaluated,
            };
            emit(out, format, &report, || {
                let eps = report.epsilon.map(|e| format!("{e:?}")).unwrap_or_default();
                (
                    "metric,center_x,center_y,radius,k_used,epsilon,tolerance,n,decisions_evaluated".into(),
                    format!(
                        "{},{:?},{:?},{:?},{},{eps},{:?},{},{}",
                        metric_name(report.metric),
                        report.center[0],
                        report.center[1],
                        report.radius,
                        report.k_used,
                        report.tolerance,
                        report.n,
                        report.decisions_evaluated
                    ),
                )
            })
        }
        Command::Oracle { input, metric, svg, format } => {
            validate_metric(&metric, false)?;
            let points = load(&input)?;
            let norm = metric.metric.norm();
            let sol = yolk_bruteforce(&points, norm).map_err(|e| Failure::Input(e.to_string()))?;
            if let Some(path) = svg {
                let ball = match norm {
                    NormTag::Euclidean => Ball { polygon: Vec::new(), circle: Some((sol.center, sol.radius)) },
                    _ => Ball { polygon: unit_ball(norm, sol.center, sol.radius), circle: None },
                };
                write_svg(&path, &points, &ball)?;
            }
            let report = OracleReport {
                metric: metric.metric.metric(),
                norm,
                center: [sol.center.x, sol.center.y],
                radius: sol.radius,
                active_constraints: sol.active_constraints,
                n: points.len(),
            };
            emit(out, format, &report, || {
                let active: Vec<String> = report.active_constraints.iter().map(usize::to_string).collect();
                (
                    "metric,norm,center_x,center_y,radius,active_constraints,n".into(),
                    format!(
                        "{},{:?},{:?},{:?},{:?},{},{}",
                        metric_name(report.metric),
                        report.norm,
                        report.center[0],
                        report.center[1],
                        report.radius,
                        active.join(";"),
                        report.n
                    ),
                )
            })
        }
        Command::Check { input, metric, format } => {
            validate_metric(&metric, true)?;
            let points = load(&input)?;
            let m = metric.metric.metric();
            let oracle = yolk_bruteforce(&points, metric.metric.norm()).map_err(|e| Failure::Input(e.to_string()))?;
            let solved = yolk(&points, m, metric.epsilon, metric.tol).map_err(|e| Failure::Input(e.to_string()))?;
            let report = check_verdict(m, metric.epsilon, metric.tol, points.len(), solved.radius, oracle.radius);
            emit(out, format, &report, || {
                (
                    "metric,n,solver_radius,oracle_radius,gap,allowed,pass".into(),
                    format!(
                        "{},{},{:?},{:?},{:?},{:?},{}",
                        metric_name(report.metric),
                        report.n,
                        report.solver_radius,
                        report.oracle_radius,
                        report.gap,
                        report.allowed,
                        report.pass
                    ),
                )
            })?;
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Check(format!("gap {:e} exceeds {:e}", report.gap, report.allowed)))
            }
        }
        Command::Bench { gen, sizes, seed, repeats, k, format } => {
            if sizes.is_empty() || sizes.contains(&0) || repeats == 0 || k < 3 {
                return Err(Failure::Usage("bench needs positive sizes and repeats and k >= 3".into()));
            }
            let mut rows = Vec::new();
            for &n in &sizes {
                let points = generate(gen, n, seed).map_err(Failure::Input)?;
                let (lo, hi) = points.bounding_box();
                let (cx, cy) = (0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y));
                let r = 0.05 * (hi - lo).norm().max(1e-9);
                let decider = Decider::new(k, &points).map_err(|e| Failure::Input(e.to_string()))?;
                let mut times: Vec<f64> = (0..repeats)
                    .map(|_| {
                        let t = Instant::now();
                        std::hint::black_box(decider.decide(r, cx, cy));
                        t.elapsed().as_secs_f64() * 1e3
                    })
                    .collect();
                times.sort_by(f64::total_cmp);
                rows.push(BenchRow { n, ms: times[times.len() / 2] });
            }
            match format {
                OutputFormat::Json => write_json(out, &rows),
                OutputFormat::Csv => {
                    let mut text = String::from("n,ms\n");
                    for row in &rows {
                        text.push_str(&format!("{},{:.3}\n", row.n, row.ms));
                    }
                    write_out(out, &text)
                }
            }
        }
        Command::Gen { gen, n, seed, output, format } => {
            let points = generate(gen, n, seed).map_err(Failure::Usage)?;
            let header = format!("generator={} n={n} seed={seed} prng={PRNG_NAME}", gen.name());
            let text = input::write(&points, point_format(format), Some(&header));
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| io_failure(&path, e)),
                None => write_out(out, &text),
            }
        }
    }
}

fn point_format(format: OutputFormat) -> InputFormat {
    match format {
        OutputFormat::Json => InputFormat::Json,
        OutputFormat::Csv => InputFormat::Csv,
    }
}

fn validate_metric(args: &MetricArgs, need_epsilon: bool) -> Result<(), Failure> {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(Failure::Usage(format!("--tol must be positive, got {}", args.tol)));
    }
    match (args.metric, args.epsilon) {
        (MetricArg::L2, None) if need_epsilon => Err(Failure::Usage("--metric l2 requires --epsilon".into())),
        (MetricArg::L2, Some(eps)) if !(eps.is_finite() && eps >= yolk::solver::MIN_EPSILON) => Err(Failure::Usage(
            format!("--epsilon must be at least {}, got {eps}", yolk::solver::MIN_EPSILON),
        )),
        (MetricArg::L1 | MetricArg::Linf, Some(_)) => {
            Err(Failure::Usage("--epsilon only applies to --metric l2".into()))
        }
        _ => Ok(()),
    }
}

pub fn load(args: &InputArgs) -> Result<PointSet, Failure> {
    if let Some(kind) = args.gen {
        if args.input_format.is_some() {
            return Err(Failure::Usage("--input-format only applies with --input".into()));
        }
        let n = args.n.unwrap_or(DEFAULT_GEN_N);
        return generate(kind, n, args.seed.unwrap_or(0)).map_err(Failure::Usage);
    }
    if args.n.is_some() || args.seed.is_some() {
        return Err(Failure::Usage("--n and --seed only apply with --gen".into()));
    }
    let path = args.input.as_deref().ok_or_else(|| Failure::Usage("need --input or --gen".into()))?;
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| io_failure(path, e))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?
    };
    let format = args.input_format.unwrap_or_else(|| InputFormat::from_path(path));
    input::parse(&text, format).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    format: OutputFormat,
    value: &T,
    csv: impl FnOnce() -> (String, String),
) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => write_json(out, value),
        OutputFormat::Csv => {
            let (header, row) = csv();
            write_out(out, &format!("{header}\n{row}\n"))
        }
    }
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string(value).map_err(|e| Failure::Input(format!("serializing output: {e}")))?;
    text.push('\n');
    write_out(out, &text)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Input(format!("writing output: {e}")))
}

fn metric_name(m: Metric) -> &'static str {
    match m {
        Metric::L1 => "l1",
        Metric::L2Approx => "l2",
        Metric::Linf => "linf",
    }
}

fn write_svg(path: &Path, points: &PointSet, ball: &Ball) -> Result<(), Failure> {
    let lines = if points.len() <= SVG_LINE_LIMIT {
        limiting_median_lines(points).unwrap_or_default()
    } else {
        Vec::new()
    };
    std::fs::write(path, svg::render(points, &lines, ball)).map_err(|e| io_failure(path, e))
}

/// Vertices of the k-gon with circumradius `r`, first vertex straight up,
/// running clockwise.
fn regular_polygon(k: usize, r: f64, c: Point) -> Vec<Point> {
    (0..k)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / k as f64;
            Point::new(c.x + r * t.sin(), c.y + r * t.cos())
        })
        .collect()
}

fn unit_ball(norm: NormTag, c: Point, r: f64) -> Vec<Point> {
    match norm {
        NormTag::Diamond => regular_polygon(4, r, c),
        NormTag::Square => [(1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0)]
            .iter()
            .map(|&(sx, sy)| Point::new(c.x + sx * r, c.y + sy * r))
            .collect(),
        NormTag::Euclidean => regular_polygon(64, r, c),
    }
}
