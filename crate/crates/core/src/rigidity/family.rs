//! The two-variable family `A`, `B` that is `C^ℓ` similar on the unit ball
//! through an explicit `S` but not holomorphically similar at the origin.

use num::Complex;
use serde::Serialize;

use crate::algebra::{vars, GaussianRational, Matrix, Poly, PolyMatrix, RationalFunction};

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleFamily {
    pub ell: u32,
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    /// `u·w^{2+ℓ}/(zu+wv)` with `u`, `v` standing for `z̄`, `w̄`.
    pub c_z: RationalFunction,
    /// `v·z^{2+ℓ}/(zu+wv)`
    pub c_w: RationalFunction,
    pub s: Matrix<RationalFunction>,
}

fn zw_mono(z: u32, w: u32) -> Poly {
    Poly::monomial(vars(&["z", "w"]), GaussianRational::one(), vec![z, w])
}

fn zwuv_mono(e: [u32; 4]) -> Poly {
    Poly::monomial(vars(&["z", "w", "u", "v"]), GaussianRational::one(), e.to_vec())
}

/// `zu + wv`, standing for `|z|² + |w|²`.
fn norm_form() -> Poly {
    &zwuv_mono([1, 0, 1, 0]) + &zwuv_mono([0, 1, 0, 1])
}

pub fn build_family(ell: u32) -> CounterexampleFamily {
    let (lo, hi) = (2 + ell, 3 + ell);
    let zero = Poly::zero(vars(&["z", "w"]));
    let a = Matrix::from_rows(vec![
        vec![zw_mono(lo, lo), zw_mono(hi, 0)],
        vec![zw_mono(0, hi), zero.clone()],
    ])
    .expect("2x2");
    let b = Matrix::from_rows(vec![
        vec![zero, zw_mono(hi, 0)],
        vec![zw_mono(0, hi), zw_mono(lo, lo)],
    ])
    .expect("2x2");
    let q = norm_form();
    let c_z = RationalFunction::new(zwuv_mono([0, lo, 1, 0]), q.clone()).expect("nonzero");
    let c_w = RationalFunction::new(zwuv_mono([lo, 0, 0, 1]), q).expect("nonzero");
    let one = RationalFunction::one(c_z.vars().clone());
    let s = Matrix::from_rows(vec![vec![one.clone(), c_w.clone()], vec![-c_z.clone(), one]])
        .expect("2x2");
    CounterexampleFamily {
        ell,
        a: PolyMatrix::new(vars(&["z", "w"]), a).expect("vars"),
        b: PolyMatrix::new(vars(&["z", "w"]), b).expect("vars"),
        c_z,
        c_w,
        s,
    }
}

/// `(1+shift)·u w^{2+ℓ} z^{3+ℓ} + v z^{2+ℓ} w^{3+ℓ} − z^{2+ℓ}w^{2+ℓ}(zu+wv)`,
/// the division identity with denominators cleared. `shift = 0` is the
/// genuine identity; anything else is a perturbed control.
pub fn division_identity_residual(ell: u32, shift: i64) -> Poly {
    let (lo, hi) = (2 + ell, 3 + ell);
    let first = zwuv_mono([hi, lo, 1, 0]).scale(&GaussianRational::from_integer(1 + shift));
    let second = zwuv_mono([lo, hi, 0, 1]);
    &(&first + &second) - &(&zwuv_mono([lo, lo, 0, 0]) * &norm_form())
}

pub fn verify_division_identity(ell: u32) -> bool {
    division_identity_residual(ell, 0).is_zero()
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothSimilarityReport {
    pub ell: u32,
    /// `S̃B − AS̃ = 0` for `S̃ = (zu+wv)·S`, which is polynomial.
    pub exact_conjugation: bool,
    pub grid_points: usize,
    pub min_abs_det_s: f64,
    pub max_abs_cz_cw: f64,
    pub det_nonvanishing: bool,
    /// `|c_z c_w|` at `z = w = 1/2`.
    pub cz_cw_at_half: f64,
    /// Numerator degree minus denominator degree of `c_z` and of `c_w`.
    pub degree_gap_cz: i64,
    pub degree_gap_cw: i64,
}

/// `(c_z, c_w)` at a point of `C²` with `u = z̄`, `v = w̄`.
pub fn eval_cz_cw(ell: u32, z: Complex<f64>, w: Complex<f64>) -> (Complex<f64>, Complex<f64>) {
    let q = z.norm_sqr() + w.norm_sqr();
    let e = 2 + ell as i32;
    (z.conj() * w.powi(e) / q, w.conj() * z.powi(e) / q)
}

/// One hundred points of the open unit ball: five radii, four splittings of
/// the radius between `z` and `w`, five phase pairs.
pub fn ball_grid() -> Vec<(Complex<f64>, Complex<f64>)> {
    let mut pts = Vec::with_capacity(100);
    for r in [0.2, 0.4, 0.6, 0.8, 0.99] {
        for alpha in [0.1f64, 0.5, 1.0, 1.4] {
            for k in 0..5 {
                let th = std::f64::consts::TAU * k as f64 / 5.0;
                let z = Complex::from_polar(r * alpha.cos(), th);
                let w = Complex::from_polar(r * alpha.sin(), 2.0 * th);
                pts.push((z, w));
            }
        }
    }
    pts
}

pub fn verify_smooth_similarity(ell: u32) -> SmoothSimilarityReport {
    let fam = build_family(ell);
    let v4 = vars(&["z", "w", "u", "v"]);
    let a = fam.a.with_vars(&v4).expect("z, w are among z, w, u, v");
    let b = fam.b.with_vars(&v4).expect("z, w are among z, w, u, v");
    let q = norm_form();
    let s = PolyMatrix::new(
        v4.clone(),
        Matrix::from_rows(vec![
            vec![q.clone(), fam.c_w.numer().clone()],
            vec![-fam.c_z.numer().clone(), q],
        ])
        .expect("2x2"),
    )
    .expect("vars");
    let exact_conjugation = (&(&s * &b) - &(&a * &s)).is_zero();

    let grid = ball_grid();
    let mut min_det = f64::INFINITY;
    let mut max_prod = 0.0f64;
    for &(z, w) in &grid {
        let (cz, cw) = eval_cz_cw(ell, z, w);
        min_det = min_det.min((1.0 + cz * cw).norm());
        max_prod = max_prod.max((cz * cw).norm());
    }
    let half = Complex::new(0.5, 0.0);
    let (cz, cw) = eval_cz_cw(ell, half, half);
    let gap = |f: &RationalFunction| {
        f.numer().total_degree().unwrap_or(0) as i64 - f.denom().total_degree().unwrap_or(0) as i64
    };
    SmoothSimilarityReport {
        ell,
        exact_conjugation,
        grid_points: grid.len(),
        min_abs_det_s: min_det,
        max_abs_cz_cw: max_prod,
        det_nonvanishing: min_det > 0.0 && max_prod < 1.0,
        cz_cw_at_half: (cz * cw).norm(),
        degree_gap_cz: gap(&fam.c_z),
        degree_gap_cw: gap(&fam.c_w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let f = build_family(0);
        assert_eq!(f.a.to_strings(), vec![vec!["z^2*w^2", "z^3"], vec!["w^3", "0"]]);
        assert_eq!(build_family(1).a.to_strings()[0][1], "z^4");
        assert_eq!(f.c_z.to_string(), "(w^2*u)/(z*u+w*v)");
    }

    #[test]
    fn division_identity() {
        for ell in 0..=6 {
            assert!(verify_division_identity(ell));
        }
        assert!(!division_identity_residual(0, 1).is_zero());
    }

    #[test]
    fn smooth_similarity() {
        for ell in 0..=3 {
            let r = verify_smooth_similarity(ell);
            assert!(r.exact_conjugation && r.det_nonvanishing);
            assert_eq!(r.degree_gap_cz, ell as i64 + 1);
            assert_eq!(r.degree_gap_cw, ell as i64 + 1);
            assert!((r.cz_cw_at_half - 0.5f64.powi(2 * ell as i32 + 4)).abs() < 1e-15);
        }
    }
}
