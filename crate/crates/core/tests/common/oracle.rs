//! Reference implementations that share no code path with the library:
//! Laplace determinants, gcds of minors, and intertwiner dimensions by
//! direct elimination on the entries of Θ.

use similitude::algebra::Ring;
use similitude::{GaussianRational, Matrix, PolyMatrix, ScalarMatrix, UniPoly};

/// Cofactor expansion along the first row.
pub fn det<T: Ring>(m: &Matrix<T>) -> T {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        panic!("empty determinant");
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = m.get(0, 0).zero_like();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = m.get(0, j).clone() * det(&m.submatrix(&rows, &cols));
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Monic gcd of all `k × k` minors (zero if they all vanish).
pub fn minor_gcd(m: &Matrix<UniPoly>, k: usize) -> UniPoly {
    let mut acc = UniPoly::zero();
    for r in combinations(m.rows(), k) {
        for c in combinations(m.cols(), k) {
            acc = UniPoly::gcd(&acc, &det(&m.submatrix(&r, &c)));
        }
    }
    acc
}

/// Invariant factors `D_k / D_{k−1}` from determinantal divisors.
pub fn invariant_factors(m: &Matrix<UniPoly>) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut prev = UniPoly::one();
    for k in 1..=m.rows().min(m.cols()) {
        let d = minor_gcd(m, k);
        if d.is_zero() {
            break;
        }
        out.push(d.div_exact(&prev).expect("determinantal divisors form a chain"));
        prev = d;
    }
    out
}

/// Valuations at `xi` of the determinantal divisors `D_1, D_2, …` up to the
/// rank.
pub fn minor_valuations(m: &PolyMatrix, xi: &GaussianRational) -> Vec<u32> {
    let u = m.to_unipoly().unwrap();
    let mut out = Vec::new();
    for k in 1..=u.rows().min(u.cols()) {
        let d = minor_gcd(&u, k);
        match d.valuation_at(xi) {
            Some(v) => out.push(v as u32),
            None => break,
        }
    }
    out
}

/// Rank by plain Gaussian elimination on row vectors.
pub fn rank(mut rows: Vec<Vec<GaussianRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                #[allow(clippy::needless_range_loop)]
                for j in c..ncols {
                    let v = &rows[i][j] - &(&f * &rows[r][j]);
                    rows[i][j] = v;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim {Θ : A₀Θ = ΘB₀}` from the `n²` scalar equations
/// `Σ_k a_ik θ_kj − θ_ik b_kj = 0`, unknowns `θ` indexed row by row.
pub fn intertwiner_dim(a0: &ScalarMatrix, b0: &ScalarMatrix) -> usize {
    let n = a0.rows();
    let idx = |i: usize, j: usize| i * n + j;
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![GaussianRational::zero(); n * n];
            for k in 0..n {
                row[idx(k, j)] = &row[idx(k, j)] + a0.get(i, k);
                row[idx(i, k)] = &row[idx(i, k)] - b0.get(k, j);
            }
            eqs.push(row);
        }
    }
    n * n - rank(eqs)
}
