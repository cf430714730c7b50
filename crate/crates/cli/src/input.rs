//! Point files: CSV with one `x,y` pair per line (`#` starts a comment) or a
//! JSON array of `[x, y]` pairs.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use yolk::{Point, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
}

impl InputFormat {
    /// `.json` means JSON; anything else is read as CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => InputFormat::Json,
            _ => InputFormat::Csv,
        }
    }
}

pub fn parse(text: &str, format: InputFormat) -> Result<PointSet, String> {
    let points = match format {
        InputFormat::Csv => parse_csv(text)?,
        InputFormat::Json => serde_json::from_str::<Vec<[f64; 2]>>(text)
            .map_err(|e| format!("invalid JSON point list: {e}"))?
            .into_iter()
            .map(|[x, y]| Point::new(x, y))
            .collect(),
    };
    PointSet::new(points).map_err(|e| e.to_string())
}

fn parse_csv(text: &str) -> Result<Vec<Point>, String> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [x, y] = fields[..] else {
            return Err(format!("line {}: expected `x,y`, got {raw:?}", lineno + 1));
        };
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| format!("line {}: {s:?} is not a number", lineno + 1))
        };
        points.push(Point::new(num(x)?, num(y)?));
    }
    Ok(points)
}

/// Serializes so that [`parse`] recovers exactly the same coordinates.
pub fn write(points: &PointSet, format: InputFormat, header: Option<&str>) -> String {
    match format {
        InputFormat::Csv => {
            let mut out = String::new();
            if let Some(h) = header {
                for line in h.lines() {
                    let _ = writeln!(out, "# {line}");
                }
            }
            for p in points.iter() {
                let _ = writeln!(out, "{:?},{:?}", p.x, p.y);
            }
            out
        }
        InputFormat::Json => {
            let pairs: Vec<[f64; 2]> = points.iter().map(|p| [p.x, p.y]).collect();
            let mut s = serde_json::to_string(&pairs).expect("finite coordinates serialize");
            s.push('\n');
            s
        }
    }
}
