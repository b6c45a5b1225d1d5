//! Winding numbers of sampled closed curves in `C*`.

use std::f64::consts::{PI, TAU};

use num::Complex;

use crate::error::{Error, Result};

/// Index of the closed polygon through `samples` around `0`. The last sample
/// connects back to the first. Consecutive samples must differ in argument
/// by less than `π`, which makes the principal-branch increments exact and
/// the rounded total a certified integer.
pub fn winding_number(samples: &[Complex<f64>]) -> Result<i64> {
    if samples.is_empty() {
        return Err(Error::Invalid("a curve needs at least one sample".into()));
    }
    if let Some(i) = samples.iter().position(|s| s.norm() == 0.0 || !s.norm().is_finite()) {
        return Err(Error::ZeroSample(i));
    }
    let n = samples.len();
    let mut total = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        let inc = (samples[j] / samples[i]).arg();
        if inc.abs() >= PI {
            return Err(Error::Undersampled(i, j));
        }
        total += inc;
    }
    Ok((total / TAU).round() as i64)
}

/// `f(2πk/n)` for `k = 0..n`.
pub fn sample_curve(n: usize, f: impl Fn(f64) -> Complex<f64>) -> Vec<Complex<f64>> {
    (0..n).map(|k| f(TAU * k as f64 / n as f64)).collect()
}
