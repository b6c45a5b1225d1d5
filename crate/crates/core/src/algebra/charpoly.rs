//! Division-free characteristic polynomials (Berkowitz).

use super::field::Ring;
use super::matrix::Matrix;
use super::scalar::GaussianRational;
use super::unipoly::UniPoly;

/// Coefficients of `det(λI − A)` in ascending powers of `λ`.
///
/// Works over any commutative ring, so it applies to matrices of
/// polynomials as well as constant matrices.
pub fn berkowitz<T: Ring>(a: &Matrix<T>) -> Vec<T> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let t = a.entries().next().expect("nonempty matrix");
    let (zero, one) = (t.zero_like(), t.one_like());
    // Descending coefficients of the characteristic polynomial of the
    // leading k×k block.
    let mut p = vec![one.clone()];
    for k in 0..n {
        let akk = a.get(k, k).clone();
        // Toeplitz column [1, −a_kk, −R C, −R A C, ..., −R A^{k−1} C].
        let mut col = vec![one.clone(), -akk];
        if k > 0 {
            let r: Vec<T> = (0..k).map(|j| a.get(k, j).clone()).collect();
            let mut c: Vec<T> = (0..k).map(|i| a.get(i, k).clone()).collect();
            for step in 0..k {
                let rc = r
                    .iter()
                    .zip(&c)
                    .fold(zero.clone(), |acc, (x, y)| acc + x.clone() * y.clone());
                col.push(-rc);
                if step + 1 < k {
                    c = (0..k)
                        .map(|i| {
                            (0..k).fold(zero.clone(), |acc, j| {
                                acc + a.get(i, j).clone() * c[j].clone()
                            })
                        })
                        .collect();
                }
            }
        }
        // p_new = T p, T lower-triangular Toeplitz of size (k+2)×(k+1).
        let mut next = vec![zero.clone(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if i >= j && i - j < col.len() {
                    *slot = slot.clone() + col[i - j].clone() * pj.clone();
                }
            }
        }
        p = next;
    }
    p.reverse();
    p
}

/// Characteristic polynomial of a constant matrix.
pub fn char_poly(a: &Matrix<GaussianRational>) -> UniPoly {
    UniPoly::new(berkowitz(a))
}
