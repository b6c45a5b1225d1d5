//! The intertwiner operator `Θ ↦ AΘ − ΘB`, its matrix, commutants, and
//! paths to the identity inside the group of invertible commutant elements.

use num::rational::BigRational;
use num::{Complex, ToPrimitive};
use serde::Serialize;

use crate::algebra::charpoly::char_poly;
use crate::algebra::linalg::{self, det, nullspace};
use crate::algebra::roots::numeric_roots;
use crate::algebra::{generic_rank, GaussianRational, Matrix, PolyMatrix, ScalarMatrix, Vars};
use crate::error::{Error, Result};

/// Representation of `φ_{A,B}` under column-major vectorisation:
/// `M = I ⊗ A − Bᵀ ⊗ I`, so that `M · vec(Θ) = vec(AΘ − ΘB)`.
#[derive(Clone, Debug, Serialize)]
pub struct SylvesterSystem {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub m: PolyMatrix,
    pub vec_convention: &'static str,
}

fn check_pair(a: &PolyMatrix, b: &PolyMatrix) -> Result<usize> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::Size(format!(
            "expected square matrices of one size, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.vars() != b.vars() {
        return Err(Error::VariableMismatch(a.vars().to_vec(), b.vars().to_vec()));
    }
    if a.rows() == 0 {
        return Err(Error::Size("empty matrix".into()));
    }
    Ok(a.rows())
}

pub fn sylvester_matrix(a: &PolyMatrix, b: &PolyMatrix) -> Result<SylvesterSystem> {
    let n = check_pair(a, b)?;
    let id = PolyMatrix::identity(a.vars().clone(), n);
    let left = id.matrix().kron(a.matrix());
    let right = b.matrix().transpose().kron(id.matrix());
    let m = PolyMatrix::new(a.vars().clone(), &left - &right)?;
    Ok(SylvesterSystem {
        a: a.clone(),
        b: b.clone(),
        m,
        vec_convention: "column-major",
    })
}

/// Dimension of `{Θ : A(ζ₀)Θ = ΘB(ζ₀)}`.
pub fn intertwiner_dim_at(a: &PolyMatrix, b: &PolyMatrix, point: &[GaussianRational]) -> Result<usize> {
    let s = sylvester_matrix(a, b)?;
    let m0 = s.m.eval(point)?;
    Ok(m0.rows() - linalg::rank(&m0))
}

/// Dimension of the intertwiner space over the field of rational functions.
pub fn generic_intertwiner_dim(a: &PolyMatrix, b: &PolyMatrix) -> Result<usize> {
    let s = sylvester_matrix(a, b)?;
    Ok(s.m.rows() - generic_rank(&s.m))
}

/// Basis of `{Θ : A(ζ₀)Θ = ΘB(ζ₀)}` as constant matrices.
pub fn intertwiner_basis_at(
    a: &PolyMatrix,
    b: &PolyMatrix,
    point: &[GaussianRational],
) -> Result<Vec<ScalarMatrix>> {
    let n = check_pair(a, b)?;
    let m0 = sylvester_matrix(a, b)?.m.eval(point)?;
    Ok(nullspace(&m0)
        .into_iter()
        .map(|v| Matrix::unvec_column_major(&v, n, n))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutantBasis {
    pub point: Vec<GaussianRational>,
    pub basis: Vec<ScalarMatrix>,
}

pub fn commutant_basis_at(a: &PolyMatrix, point: &[GaussianRational]) -> Result<CommutantBasis> {
    Ok(CommutantBasis {
        point: point.to_vec(),
        basis: intertwiner_basis_at(a, a, point)?,
    })
}

/// One sample of a path: the parameter `t ∈ [0, 3]` and the matrix `γ(t)`.
#[derive(Clone, Debug, Serialize)]
pub struct PathSample {
    pub t: GaussianRational,
    pub matrix: ScalarMatrix,
}

fn rat(n: i64, d: i64) -> GaussianRational {
    GaussianRational::from_ratio(n, d)
}

/// Piecewise-linear route for `λ` from 0 to `R`, first along the ray in
/// direction `d` to `R·d`, then counterclockwise along the boundary of the
/// square `max(|Re|, |Im|) = R` to `R`. Vertices are exact.
fn lambda_route(d: (i64, i64), r: &GaussianRational) -> Vec<GaussianRational> {
    // The eight boundary points R·d in counterclockwise order from R.
    const RING: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];
    let pt = |(x, y): (i64, i64)| r * &GaussianRational::from_parts((x, 1), (y, 1));
    let mut route = vec![GaussianRational::zero(), pt(d)];
    let start = RING.iter().position(|&x| x == d).expect("direction");
    if start != 0 {
        for &v in RING.iter().skip(start + 1) {
            route.push(pt(v));
        }
        route.push(pt((1, 0)));
    }
    route
}

fn eval_route(route: &[GaussianRational], s: &GaussianRational) -> GaussianRational {
    // s ∈ [0, 1]; each linear piece takes an equal share of the parameter.
    let pieces = route.len() - 1;
    let scaled = s * &GaussianRational::from_integer(pieces as i64);
    let idx = scaled.re().floor().to_integer().to_usize().unwrap_or(0).min(pieces - 1);
    let local = &scaled - &GaussianRational::from_integer(idx as i64);
    let (a, b) = (&route[idx], &route[idx + 1]);
    a + &(&(b - a) * &local)
}

/// Distance from a point to the segment `[0, e]`.
fn seg_dist(p: Complex<f64>, e: Complex<f64>) -> f64 {
    let t = ((p.re * e.re + p.im * e.im) / e.norm_sqr()).clamp(0.0, 1.0);
    (p - e * t).norm()
}

/// Samples of a path in `GCom Φ` from `Θ` to the identity:
/// `Θ + λ(t)I` on `[0,1]`, `(2−t)Θ + R·I` on `[1,2]` and
/// `(1 + (3−t)N)·I` on `[2,3]`, where `N ≥ ‖Θ‖` and `R = 1 + N`.
/// Every sample is checked exactly for commutation with `Φ` and
/// invertibility.
pub fn path_to_identity(phi: &ScalarMatrix, theta: &ScalarMatrix, steps: usize) -> Result<Vec<PathSample>> {
    let n = theta.rows();
    if !theta.is_square() || !phi.is_square() || phi.rows() != n || n == 0 {
        return Err(Error::Size("Phi and Theta must be square of one size".into()));
    }
    if steps == 0 {
        return Err(Error::Invalid("steps must be positive".into()));
    }
    if phi * theta != theta * phi {
        return Err(Error::NotCommuting);
    }
    if det(theta).is_zero() {
        return Err(Error::NotInvertible);
    }
    let id = ScalarMatrix::identity(n);
    let norm: BigRational = theta.entries().map(|x| x.abs_bound()).sum();
    let big_n = GaussianRational::from_rational(norm);
    let big_r = &big_n + &GaussianRational::one();

    // Eigenvalues of −Θ, located numerically; the route is chosen to keep
    // clear of them and each sample is then re-checked exactly.
    let eig = numeric_roots(&char_poly(&-theta).squarefree_part());
    let r_f = big_r.to_complex64().re;
    const DIRS: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];
    let mut dirs: Vec<((i64, i64), f64)> = DIRS
        .iter()
        .map(|&d| {
            let e = Complex::new(d.0 as f64, d.1 as f64) * r_f;
            let clear = eig.iter().map(|&mu| seg_dist(mu, e)).fold(f64::INFINITY, f64::min);
            (d, clear)
        })
        .collect();
    dirs.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(std::cmp::Ordering::Equal));

    let step = rat(3, steps as i64);
    'dirs: for (d, _) in dirs {
        let route = lambda_route(d, &big_r);
        let mut out = Vec::with_capacity(steps + 1);
        for k in 0..=steps {
            let t = &step * &GaussianRational::from_integer(k as i64);
            let m = if t.re() <= &BigRational::from_integer(1.into()) {
                let lam = eval_route(&route, &t);
                theta + &id.scale(&lam)
            } else if t.re() <= &BigRational::from_integer(2.into()) {
                let c = &GaussianRational::from_integer(2) - &t;
                &theta.scale(&c) + &id.scale(&big_r)
            } else {
                let c = &GaussianRational::one() + &(&(&GaussianRational::from_integer(3) - &t) * &big_n);
                id.scale(&c)
            };
            if det(&m).is_zero() || phi * &m != &m * phi {
                continue 'dirs;
            }
            out.push(PathSample { t, matrix: m });
        }
        return Ok(out);
    }
    // Unreachable in practice: the eight rays cannot all meet an eigenvalue
    // at a sample, but report honestly if they do.
    Err(Error::Invalid("no eigenvalue-free route found at this sampling".into()))
}

/// Re-expands `x` in `basis`, returning the coefficients if `x` lies in the
/// span.
pub fn coordinates_in(basis: &[ScalarMatrix], x: &ScalarMatrix) -> Option<Vec<GaussianRational>> {
    if basis.is_empty() {
        return x.is_zero().then(Vec::new);
    }
    let cols: Vec<Vec<GaussianRational>> = basis.iter().map(|b| b.vec_column_major()).collect();
    let m = Matrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i].clone());
    linalg::solve(&m, &x.vec_column_major())
}

/// Constant matrix as a polynomial matrix over `vars`.
pub fn lift(vars: &Vars, m: &ScalarMatrix) -> PolyMatrix {
    PolyMatrix::from_constant(vars.clone(), m)
}
