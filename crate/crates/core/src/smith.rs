//! Local Smith factorization of a univariate polynomial matrix at a point,
//! and the kernel projections and sections built from it.
//!
//! At a point `ξ` every univariate matrix factors as
//! `M = E · diag((z−ξ)^κ₁, …, (z−ξ)^κ_r, 0, …) · F` where `E` and `F` are
//! matrices of rational functions that are regular and invertible at `ξ`.
//! The factorization is computed in the local ring at `ξ`: pivot on an entry
//! of least order of vanishing, normalise it to a pure power, clear its row
//! and column.

use serde::Serialize;

use crate::algebra::{GaussianRational, Matrix, Poly, PolyMatrix, RationalFunction, Vars};
use crate::error::{Error, Result};

type RfMatrix = Matrix<RationalFunction>;

#[derive(Clone, Debug, Serialize)]
pub struct SmithFactorization {
    pub point: GaussianRational,
    pub e: RfMatrix,
    pub exponents: Vec<u32>,
    pub f: RfMatrix,
    /// Inverse of `f`, tracked alongside it.
    #[serde(skip)]
    pub f_inv: RfMatrix,
    pub generic_rank: usize,
    #[serde(skip)]
    vars: Vars,
}

impl SmithFactorization {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// The middle factor `diag((z−ξ)^κ) ⊕ 0`, of the shape of `M`.
    pub fn diagonal(&self) -> RfMatrix {
        let (n, m) = (self.e.rows(), self.f.rows());
        let zero = RationalFunction::zero(self.vars.clone());
        let lin = linear(&self.vars, &self.point);
        let mut d = Matrix::from_fn(n, m, |_, _| zero.clone());
        for (i, &k) in self.exponents.iter().enumerate() {
            d.set(i, i, RationalFunction::from_poly(lin.pow(k)));
        }
        d
    }

    /// `E · D · F`.
    pub fn reconstruct(&self) -> RfMatrix {
        &(&self.e * &self.diagonal()) * &self.f
    }

    /// True when every exponent is zero, i.e. the rank of `M` does not drop
    /// at the point.
    pub fn is_unramified(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }
}

/// `z − ξ` as a polynomial in the single variable of `vars`.
fn linear(vars: &Vars, xi: &GaussianRational) -> Poly {
    &Poly::var(vars.clone(), &vars[0]).unwrap() - &Poly::constant(vars.clone(), xi.clone())
}

fn univariate_vars(m: &PolyMatrix) -> Result<Vars> {
    if !m.is_univariate() {
        return Err(Error::NotUnivariate(m.vars().to_vec()));
    }
    Ok(m.vars().clone())
}

/// Local Smith factorization of `m` at `xi`.
pub fn local_smith(m: &PolyMatrix, xi: &GaussianRational) -> Result<SmithFactorization> {
    let vars = univariate_vars(m)?;
    let (n, cols) = (m.rows(), m.cols());
    let zero = RationalFunction::zero(vars.clone());
    // Work at the origin: W(z) = M(z + ξ).
    let mut w = m.to_rational().map(|f| f.shift(xi));
    let mut e = Matrix::identity_like(&zero, n);
    let mut f = Matrix::identity_like(&zero, cols);
    let mut f_inv = Matrix::identity_like(&zero, cols);
    let z = RationalFunction::from_poly(Poly::var(vars.clone(), &vars[0]).unwrap());
    let mut exponents = Vec::new();

    for k in 0..n.min(cols) {
        // Least valuation, ties broken by smallest (row, col).
        let mut best: Option<(usize, usize, i64)> = None;
        for i in k..n {
            for j in k..cols {
                if let Some(v) = w.get(i, j).valuation() {
                    if best.is_none_or(|(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, kappa)) = best else { break };
        let kappa = u32::try_from(kappa).expect("entries are regular at the point");

        // Row swap k <-> pi: W ← R W, E ← E R⁻¹ swaps columns of E.
        w.swap_rows(k, pi);
        e.swap_cols(k, pi);
        // Column swap k <-> pj: W ← W C, F ← C⁻¹ F, F⁻¹ ← F⁻¹ C.
        w.swap_cols(k, pj);
        f.swap_rows(k, pj);
        f_inv.swap_cols(k, pj);

        // Normalise the pivot to z^κ by scaling row k with 1/u.
        let zk = RationalFunction::from_poly(z.numer().pow(kappa));
        let unit = w.get(k, k) * &zk.inv().unwrap();
        let unit_inv = unit.inv().expect("nonzero pivot");
        for j in 0..cols {
            let v = w.get(k, j) * &unit_inv;
            w.set(k, j, v);
        }
        for i in 0..n {
            let v = e.get(i, k) * &unit;
            e.set(i, k, v);
        }

        // Clear column k below the pivot: row_i −= c·row_k, E[:,k] += c·E[:,i].
        for i in k + 1..n {
            if w.get(i, k).is_zero() {
                continue;
            }
            let c = w.get(i, k) * &zk.inv().unwrap();
            for j in k..cols {
                let v = w.get(i, j).sub_mul(&c, w.get(k, j));
                w.set(i, j, v);
            }
            for r in 0..n {
                let v = e.get(r, k).sub_mul(&-&c, e.get(r, i));
                e.set(r, k, v);
            }
        }
        // Clear row k right of the pivot: col_j −= c·col_k, F[k,:] += c·F[j,:],
        // F⁻¹[:,j] −= c·F⁻¹[:,k].
        for j in k + 1..cols {
            if w.get(k, j).is_zero() {
                continue;
            }
            let c = w.get(k, j) * &zk.inv().unwrap();
            for i in k..n {
                let v = w.get(i, j).sub_mul(&c, w.get(i, k));
                w.set(i, j, v);
            }
            for s in 0..cols {
                let v = f.get(k, s).sub_mul(&-&c, f.get(j, s));
                f.set(k, s, v);
                let v = f_inv.get(s, j).sub_mul(&c, f_inv.get(s, k));
                f_inv.set(s, j, v);
            }
        }
        debug_assert!(w.get(k, k) == &zk);
        exponents.push(kappa);
    }

    let back = -xi;
    let unshift = |x: &RationalFunction| x.shift(&back);
    Ok(SmithFactorization {
        point: xi.clone(),
        e: e.map(unshift),
        generic_rank: exponents.len(),
        exponents,
        f: f.map(unshift),
        f_inv: f_inv.map(unshift),
        vars,
    })
}

/// Holomorphic idempotent whose image is the kernel of `M` near the point.
#[derive(Clone, Debug, Serialize)]
pub struct KernelProjection {
    pub point: GaussianRational,
    pub p: RfMatrix,
    pub exponents: Vec<u32>,
}

impl KernelProjection {
    /// `P(ζ)`; fails only if `ζ` is a pole of some entry.
    pub fn eval(&self, zeta: &GaussianRational) -> Result<Matrix<GaussianRational>> {
        self.p.try_map(|f| f.eval(std::slice::from_ref(zeta)))
    }
}

/// `P = F⁻¹ · (0 ⊕ I_{m−r}) · F` from the local Smith factorization.
pub fn kernel_projection(m: &PolyMatrix, xi: &GaussianRational) -> Result<KernelProjection> {
    let s = local_smith(m, xi)?;
    Ok(KernelProjection {
        point: xi.clone(),
        p: projection_from(&s),
        exponents: s.exponents,
    })
}

pub(crate) fn projection_from(s: &SmithFactorization) -> RfMatrix {
    let cols = s.f.rows();
    let zero = RationalFunction::zero(s.vars.clone());
    let one = RationalFunction::one(s.vars.clone());
    let r = s.generic_rank;
    let mid = Matrix::from_fn(cols, cols, |i, j| {
        if i == j && i >= r {
            one.clone()
        } else {
            zero.clone()
        }
    });
    &(&s.f_inv * &mid) * &s.f
}

/// `h(ζ) = P(ζ) v`, a holomorphic section of the kernel bundle through `v`.
///
/// When the rank of `M` drops at the point the section exists only if the
/// projection fixes `v`; otherwise the kernel dimension jumps and the call
/// fails.
pub fn holomorphic_kernel_section(
    m: &PolyMatrix,
    xi: &GaussianRational,
    v: &[GaussianRational],
) -> Result<Vec<RationalFunction>> {
    let vars = univariate_vars(m)?;
    if v.len() != m.cols() {
        return Err(Error::Size(format!(
            "vector of length {} for a matrix with {} columns",
            v.len(),
            m.cols()
        )));
    }
    let m0 = m.eval(std::slice::from_ref(xi))?;
    if m0.mul_vec(v).iter().any(|x| !x.is_zero()) {
        return Err(Error::NotInKernel);
    }
    let proj = kernel_projection(m, xi)?;
    let vf: Vec<RationalFunction> = v
        .iter()
        .map(|c| RationalFunction::constant(vars.clone(), c.clone()))
        .collect();
    let h = proj.p.mul_vec(&vf);
    if !proj.exponents.iter().all(|&k| k == 0) {
        let at = h
            .iter()
            .map(|f| f.eval(std::slice::from_ref(xi)))
            .collect::<Result<Vec<_>>>()?;
        if at != v {
            return Err(Error::KernelDimensionJumps);
        }
    }
    Ok(h)
}
