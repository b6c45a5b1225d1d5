//! Pointwise similarity, Wasow's constancy criterion, and constructive local
//! holomorphic similarity through the kernel projection of `M_{A,B}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::linalg::det;
use crate::algebra::pid::invariant_factors;
use crate::algebra::{
    GaussianRational, Matrix, Poly, PolyMatrix, RationalFunction, ScalarMatrix, UniPoly,
};
use crate::error::{Error, Result};
use crate::smith::{local_smith, projection_from};
use crate::sylvester::{generic_intertwiner_dim, intertwiner_basis_at, sylvester_matrix};

/// Attempts made by the random witness search before giving up.
pub const WITNESS_TRIES: usize = 32;

/// `λI − A₀` over `Q(i)[λ]`.
pub fn characteristic_matrix(a: &ScalarMatrix) -> Matrix<UniPoly> {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        let c = UniPoly::constant(-a.get(i, j));
        if i == j {
            &c + &UniPoly::x()
        } else {
            c
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PointwiseVerdict {
    pub similar: bool,
    pub invariant_factors_a: Vec<String>,
    pub invariant_factors_b: Vec<String>,
    pub witness: Option<ScalarMatrix>,
}

fn factor_strings(fs: &[UniPoly]) -> Vec<String> {
    fs.iter()
        .map(|p| Poly::from_unipoly(p, "lambda").to_string())
        .collect()
}

/// Decides whether `A₀` and `B₀` are similar by comparing the invariant
/// factors of their characteristic matrices. With `want_witness`, a matrix
/// `Γ` with `Γ⁻¹A₀Γ = B₀` is searched among random integer combinations of
/// the intertwiner basis.
pub fn pointwise_similar(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    want_witness: bool,
    seed: u64,
) -> Result<PointwiseVerdict> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() || a.rows() == 0 {
        return Err(Error::Size("pointwise similarity needs square matrices of one size".into()));
    }
    let fa = invariant_factors(&characteristic_matrix(a));
    let fb = invariant_factors(&characteristic_matrix(b));
    let similar = fa == fb;
    let witness = if similar && want_witness {
        Some(intertwining_witness(a, b, seed)?)
    } else {
        None
    };
    Ok(PointwiseVerdict {
        similar,
        invariant_factors_a: factor_strings(&fa),
        invariant_factors_b: factor_strings(&fb),
        witness,
    })
}

/// An invertible `Γ` with `AΓ = ΓB`, by seeded random search.
pub fn intertwining_witness(a: &ScalarMatrix, b: &ScalarMatrix, seed: u64) -> Result<ScalarMatrix> {
    if a == b {
        return Ok(ScalarMatrix::identity(a.rows()));
    }
    let vars = crate::algebra::vars::<&str>(&[]);
    let basis = intertwiner_basis_at(
        &PolyMatrix::from_constant(vars.clone(), a),
        &PolyMatrix::from_constant(vars, b),
        &[],
    )?;
    invertible_combination(&basis, seed).ok_or(Error::WitnessSearchExhausted(WITNESS_TRIES))
}

/// Random combination of `basis` with coefficients in `{−5, …, 5}` that is
/// invertible, if one is found within [`WITNESS_TRIES`] attempts.
pub fn invertible_combination(basis: &[ScalarMatrix], seed: u64) -> Option<ScalarMatrix> {
    let first = basis.first()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..WITNESS_TRIES {
        let mut acc = ScalarMatrix::zeros(first.rows(), first.cols());
        for t in basis {
            let c = GaussianRational::from_integer(rng.gen_range(-5..=5));
            acc = &acc + &t.scale(&c);
        }
        if !det(&acc).is_zero() {
            return Some(acc);
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct WasowReport {
    pub point: GaussianRational,
    pub dim_at_point: usize,
    pub dim_generic: usize,
    pub constant_near_point: bool,
    pub smith_exponents: Vec<u32>,
}

/// Wasow's criterion at `ξ`: is the intertwiner dimension constant near
/// `ξ`? Constancy is equivalent to all local Smith exponents of `M_{A,B}`
/// vanishing.
pub fn wasow_check(a: &PolyMatrix, b: &PolyMatrix, xi: &GaussianRational) -> Result<WasowReport> {
    if !a.is_univariate() {
        return Err(Error::NotUnivariate(a.vars().to_vec()));
    }
    let s = sylvester_matrix(a, b)?;
    let m0 = s.m.eval(std::slice::from_ref(xi))?;
    let dim_at_point = m0.rows() - crate::algebra::linalg::rank(&m0);
    let dim_generic = generic_intertwiner_dim(a, b)?;
    let smith = local_smith(&s.m, xi)?;
    Ok(WasowReport {
        point: xi.clone(),
        dim_at_point,
        dim_generic,
        constant_near_point: dim_at_point == dim_generic,
        smith_exponents: smith.exponents,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalSimilarity {
    pub point: GaussianRational,
    pub h: Matrix<RationalFunction>,
    pub seed: ScalarMatrix,
    pub smith_exponents: Vec<u32>,
    /// True when `Φ` is invertible, so `H` is a similarity near `ξ`.
    pub invertible_at_point: bool,
}

/// `H = unvec(P · vec Φ)` with `P` the kernel projection of `M_{A,B}` at
/// `ξ`. The results `H(ξ) = Φ` and `AH = HB` are verified exactly.
pub fn local_similarity(
    a: &PolyMatrix,
    b: &PolyMatrix,
    xi: &GaussianRational,
    phi: &ScalarMatrix,
) -> Result<LocalSimilarity> {
    if !a.is_univariate() {
        return Err(Error::NotUnivariate(a.vars().to_vec()));
    }
    let n = a.rows();
    let s = sylvester_matrix(a, b)?;
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::Size("Phi must match the size of A".into()));
    }
    let pt = std::slice::from_ref(xi);
    let (a0, b0) = (a.eval(pt)?, b.eval(pt)?);
    if &a0 * phi != phi * &b0 {
        return Err(Error::NotIntertwining);
    }
    let smith = local_smith(&s.m, xi)?;
    let p = projection_from(&smith);
    let vars = a.vars().clone();
    let v: Vec<RationalFunction> = phi
        .vec_column_major()
        .into_iter()
        .map(|c| RationalFunction::constant(vars.clone(), c))
        .collect();
    let h = Matrix::unvec_column_major(&p.mul_vec(&v), n, n);
    let h0 = h.try_map(|f| f.eval(pt))?;
    if &h0 != phi {
        return Err(Error::ConstructionFails);
    }
    let (ar, br) = (a.to_rational(), b.to_rational());
    if !(&(&ar * &h) - &(&h * &br)).is_zero() {
        return Err(Error::ConstructionFails);
    }
    Ok(LocalSimilarity {
        point: xi.clone(),
        h,
        seed: phi.clone(),
        smith_exponents: smith.exponents,
        invertible_at_point: !det(phi).is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_strs(&["z"], rows).unwrap()
    }

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn pointwise_examples() {
        let a = ScalarMatrix::from_integers(&[&[1, 2], &[3, 4]]);
        let v = pointwise_similar(&a, &a, true, 0).unwrap();
        assert!(v.similar);
        assert!(v.witness.unwrap().is_identity());
        let n = ScalarMatrix::from_integers(&[&[0, 1], &[0, 0]]);
        assert!(!pointwise_similar(&n, &ScalarMatrix::zeros(2, 2), false, 0).unwrap().similar);
        let j = ScalarMatrix::from_integers(&[&[1, 1], &[0, 1]]);
        let v = pointwise_similar(&j, &ScalarMatrix::identity(2), false, 0).unwrap();
        assert!(!v.similar);
        assert_eq!(v.invariant_factors_a, vec!["1", "lambda^2-2*lambda+1"]);
        assert_eq!(v.invariant_factors_b, vec!["lambda-1", "lambda-1"]);
    }

    #[test]
    fn witness_conjugates() {
        let a = ScalarMatrix::from_integers(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 5]]);
        let p = ScalarMatrix::from_integers(&[&[1, 1, 0], &[0, 1, 2], &[1, 0, 1]]);
        let pi = crate::algebra::linalg::inverse(&p).unwrap();
        let b = &(&pi * &a) * &p;
        let v = pointwise_similar(&a, &b, true, 7).unwrap();
        let w = v.witness.unwrap();
        let wi = crate::algebra::linalg::inverse(&w).unwrap();
        assert_eq!(&(&wi * &a) * &w, b);
    }

    #[test]
    fn wasow_examples() {
        let a = pm(&[&["z", "1"], &["0", "0"]]);
        let r = wasow_check(&a, &a, &g("0")).unwrap();
        assert_eq!((r.dim_at_point, r.dim_generic, r.constant_near_point), (2, 2, true));
        let id = pm(&[&["1", "0"], &["0", "1"]]);
        let r = wasow_check(&id, &id, &g("3")).unwrap();
        assert_eq!((r.dim_at_point, r.dim_generic, r.constant_near_point), (4, 4, true));
    }

    #[test]
    fn local_similarity_examples() {
        let a = pm(&[&["0", "1"], &["0", "0"]]);
        let b = pm(&[&["0", "z"], &["0", "0"]]);
        let s = local_similarity(&a, &b, &g("1"), &ScalarMatrix::identity(2)).unwrap();
        assert!(s.invertible_at_point);
        assert!(matches!(
            local_similarity(&a, &b, &g("0"), &ScalarMatrix::identity(2)),
            Err(Error::NotIntertwining)
        ));
        let c = pm(&[&["z", "1"], &["z^2", "3"]]);
        let s = local_similarity(&c, &c, &g("1/2"), &ScalarMatrix::identity(2)).unwrap();
        assert!(s.h.is_identity());
    }
}
