//! Univariate polynomial rings as Euclidean domains: global Smith form
//! (invariant factors) and principal subresultant coefficients.

use super::field::Ring;
use super::linalg::{bareiss_det, ExactDiv};
use super::matrix::Matrix;
use super::unipoly::UniPoly;

/// Nonzero invariant factors `d_1 | d_2 | … | d_r` (monic) of a matrix over
/// `K[x]`; `r` is the rank.
pub fn invariant_factors(m: &Matrix<UniPoly>) -> Vec<UniPoly> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut out = Vec::new();
    for k in 0..rows.min(cols) {
        loop {
            // Nonzero entry of least degree in the trailing block.
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if let Some(d) = a.get(i, j).degree() {
                        if best.is_none_or(|(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                return out;
            };
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);
            let piv = a.get(k, k).clone();
            let mut clean = true;
            for i in k + 1..rows {
                let (q, r) = a.get(i, k).div_rem(&piv);
                if !q.is_zero() {
                    for j in k..cols {
                        let v = a.get(i, j) - &(&q * a.get(k, j));
                        a.set(i, j, v);
                    }
                }
                clean &= r.is_zero();
            }
            for j in k + 1..cols {
                let (q, r) = a.get(k, j).div_rem(&piv);
                if !q.is_zero() {
                    for i in k..rows {
                        let v = a.get(i, j) - &(&q * a.get(i, k));
                        a.set(i, j, v);
                    }
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            let bad = (k + 1..rows).find(|&i| {
                (k + 1..cols).any(|j| !a.get(i, j).div_rem(&piv).1.is_zero())
            });
            match bad {
                Some(i) => {
                    for j in k..cols {
                        let v = a.get(k, j) + a.get(i, j);
                        a.set(k, j, v);
                    }
                }
                None => break,
            }
        }
        out.push(a.get(k, k).monic());
    }
    out
}

/// The `j`-th principal subresultant coefficient of `f` and `g`, given as
/// ascending coefficient vectors over an integral domain with exact
/// division. `psc_0` is the resultant.
pub fn principal_subresultant<T: ExactDiv>(f: &[T], g: &[T], j: usize) -> T {
    let (m, n) = (f.len() - 1, g.len() - 1);
    assert!(j <= m.min(n), "subresultant index out of range");
    let size = m + n - 2 * j;
    let zero = f[0].zero_like();
    if size == 0 {
        return f[0].one_like();
    }
    // Rows x^{n−j−1} f, …, f, x^{m−j−1} g, …, g; columns are the
    // coefficients of x^{m+n−j−1} down to x^{j}.
    let top = m + n - j - 1;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(size);
    for s in (0..n - j).rev() {
        rows.push(shifted_row(f, s, top, size, &zero));
    }
    for s in (0..m - j).rev() {
        rows.push(shifted_row(g, s, top, size, &zero));
    }
    bareiss_det(&Matrix::from_rows(rows).expect("square"))
}

fn shifted_row<T: Ring>(p: &[T], shift: usize, top: usize, size: usize, zero: &T) -> Vec<T> {
    (0..size)
        .map(|c| {
            let power = top - c;
            power
                .checked_sub(shift)
                .and_then(|e| p.get(e))
                .cloned()
                .unwrap_or_else(|| zero.clone())
        })
        .collect()
}
