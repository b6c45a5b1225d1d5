//! Square Vandermonde determinants.

use serde::Serialize;

use crate::algebra::linalg::det;
use crate::algebra::{GaussianRational, ScalarMatrix};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VandermondeReport {
    /// `det (t_i^j)` by elimination.
    pub determinant: GaussianRational,
    /// `Π_{i<j} (t_j − t_i)`
    pub product: GaussianRational,
    pub nonzero: bool,
}

pub fn vandermonde_check(ts: &[GaussianRational]) -> VandermondeReport {
    let n = ts.len();
    let m = ScalarMatrix::from_fn(n, n, |i, j| ts[i].pow(j as u32));
    let determinant = if n == 0 { GaussianRational::one() } else { det(&m) };
    let mut product = GaussianRational::one();
    for i in 0..n {
        for j in i + 1..n {
            product = &product * &(&ts[j] - &ts[i]);
        }
    }
    VandermondeReport { nonzero: !determinant.is_zero(), determinant, product }
}
