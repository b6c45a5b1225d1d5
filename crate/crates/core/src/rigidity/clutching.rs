//! The clutching matrix `C₊` on the real sphere: its determinant on a grid.

use num::Complex;
use serde::Serialize;

/// Piecewise-linear cutoff: `1` up to `ε`, `0` from `2ε`, linear between.
pub fn chi(epsilon: f64, t: f64) -> f64 {
    if t <= epsilon {
        1.0
    } else if t >= 2.0 * epsilon {
        0.0
    } else {
        2.0 - t / epsilon
    }
}

/// `det C₊ = χ² h h* + (1 − χ)²` at a real point `x`, with `h = x₁ + i x₂`
/// and `h* = x₁ − i x₂`.
pub fn clutching_det(epsilon: f64, x: [f64; 3]) -> Complex<f64> {
    let c = chi(epsilon, x[2]);
    let h = Complex::new(x[0], x[1]);
    let hs = Complex::new(x[0], -x[1]);
    h * hs * (c * c) + Complex::new((1.0 - c) * (1.0 - c), 0.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClutchingReport {
    pub epsilon: f64,
    pub grid: usize,
    pub points: usize,
    /// Points with `χ ∈ (0, 1]` and the minimum of `Re det` over them.
    pub band_points: usize,
    pub min_re_det_band: f64,
    /// Points with `χ = 0` and the largest `|det − 1|` over them.
    pub outer_points: usize,
    pub max_dev_outer: f64,
    pub min_abs_det: f64,
    pub bound_holds: bool,
}

/// Polar angles `πk/(N−1)`, azimuths `2πj/N`, keeping points with
/// `x₃ > −ε` (the half where `C₊` lives).
pub fn clutching_invertibility(epsilon: f64, grid: usize) -> ClutchingReport {
    let mut r = ClutchingReport {
        epsilon,
        grid,
        points: 0,
        band_points: 0,
        min_re_det_band: f64::INFINITY,
        outer_points: 0,
        max_dev_outer: 0.0,
        min_abs_det: f64::INFINITY,
        bound_holds: true,
    };
    let steps = grid.max(2);
    for k in 0..steps {
        let th = std::f64::consts::PI * k as f64 / (steps - 1) as f64;
        for j in 0..steps {
            let ph = std::f64::consts::TAU * j as f64 / steps as f64;
            let x = [th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos()];
            if x[2] <= -epsilon {
                continue;
            }
            r.points += 1;
            let d = clutching_det(epsilon, x);
            r.min_abs_det = r.min_abs_det.min(d.norm());
            if chi(epsilon, x[2]) > 0.0 {
                r.band_points += 1;
                r.min_re_det_band = r.min_re_det_band.min(d.re);
            } else {
                r.outer_points += 1;
                r.max_dev_outer = r.max_dev_outer.max((d - 1.0).norm());
            }
        }
    }
    r.bound_holds = r.min_re_det_band >= 0.5 && r.max_dev_outer == 0.0;
    r
}
