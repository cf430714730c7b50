//! Seeded instance generators.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use yolk::{Point, PointSet};

pub const PRNG_NAME: &str = "ChaCha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    /// Uniform in the unit square.
    Uniform,
    /// Standard bivariate normal.
    Gaussian,
    /// Integer grid filled row by row; the seed is unused.
    Grid,
    /// Uniform positions on the line y = 2x + 1 over [0, 1).
    Collinear,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::Uniform => "uniform",
            Generator::Gaussian => "gaussian",
            Generator::Grid => "grid",
            Generator::Collinear => "collinear",
        }
    }
}

pub fn generate(kind: Generator, n: usize, seed: u64) -> Result<PointSet, String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = match kind {
        Generator::Uniform => (0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect(),
        Generator::Gaussian => (0..n)
            .map(|_| Point::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect(),
        Generator::Grid => {
            let cols = (n as f64).sqrt().ceil() as usize;
            (0..n).map(|i| Point::new((i % cols) as f64, (i / cols) as f64)).collect()
        }
        Generator::Collinear => (0..n)
            .map(|_| {
                let t: f64 = rng.gen();
                Point::new(t, 2.0 * t + 1.0)
            })
            .collect(),
    };
    PointSet::new(points).map_err(|e| format!("generator produced an invalid set: {e}"))
}
