//! Decoder scaling measurements.

use std::hint::black_box;
use std::time::Instant;

use crate::azinv::AzinvParams;
use crate::code::{CodeParams, ErrorClass};
use crate::error::{Error, Result};
use crate::monotone::levenshtein_params;
use crate::sim::Channel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Monotone,
    Azinv,
}

impl Family {
    /// Parameters used for benchmarking at length `n`: a Levenshtein code
    /// with `m = 2n`, or an azinv code with `m = 2(n-1)`. Both correct the
    /// family's deletion and reversal classes.
    pub fn bench_params(self, n: usize) -> Result<CodeParams> {
        match self {
            Family::Monotone => Ok(levenshtein_params(n, 2 * n as u64, 0)?.into()),
            Family::Azinv => Ok(AzinvParams::new(n, 2 * (n as u64).saturating_sub(1).max(1), 0)?.into()),
        }
    }

    pub fn classes(self) -> [ErrorClass; 2] {
        match self {
            Family::Monotone => [ErrorClass::Del, ErrorClass::Rev],
            Family::Azinv => [ErrorClass::Bad, ErrorClass::Bar],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingPoint {
    pub family: Family,
    pub n: usize,
    pub error_class: ErrorClass,
    pub median_ns: u64,
    pub ns_per_symbol: f64,
}

fn median(mut samples: Vec<u64>) -> u64 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Times decoding of one random corrupted codeword per `n`.
///
/// `ns` must be strictly ascending and `reps >= 1`. Each decode result is
/// checked against the transmitted codeword.
pub fn measure(family: Family, ns: &[usize], class: ErrorClass, reps: usize, seed: u64) -> Result<Vec<ScalingPoint>> {
    if ns.is_empty() || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument("n-list must be non-empty and strictly ascending".into()));
    }
    if reps == 0 {
        return Err(Error::Argument("repetitions must be at least 1".into()));
    }
    if !family.classes().contains(&class) {
        return Err(Error::Argument(format!("{class} is not a native error class of this family")));
    }
    let mut channel = Channel::new(seed);
    let mut points = Vec::with_capacity(ns.len());
    for &n in ns {
        let template = family.bench_params(n)?;
        let (x, params) = channel.random_codeword(&template);
        let (y, _) = channel
            .corrupt(&x, class)
            .ok_or_else(|| Error::Argument(format!("no valid {class} position at n = {n}")))?;

        let decoded = params.decode(&y);
        if decoded.codeword() != Some(&x) {
            return Err(Error::Argument(format!("decoder failed to recover the codeword at n = {n}")));
        }
        let samples = (0..reps)
            .map(|_| {
                let start = Instant::now();
                black_box(params.decode(black_box(&y)));
                start.elapsed().as_nanos() as u64
            })
            .collect();
        let median_ns = median(samples);
        points.push(ScalingPoint {
            family,
            n,
            error_class: class,
            median_ns,
            ns_per_symbol: median_ns as f64 / n as f64,
        });
    }
    Ok(points)
}

/// Least-squares slope of `ln(median_ns)` against `ln(n)`; `None` with fewer than two points.
pub fn loglog_slope(points: &[ScalingPoint]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|p| (p.n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| (p.median_ns.max(1) as f64).ln()).collect();
    let len = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / len;
    let mean_y = ys.iter().sum::<f64>() / len;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
