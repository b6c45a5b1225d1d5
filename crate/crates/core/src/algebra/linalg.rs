//! Exact linear algebra: Gauss-Jordan over fields and fraction-free
//! (Bareiss) elimination over integral domains with exact division.

use super::field::{Field, Ring};
use super::matrix::Matrix;
use super::poly::Poly;
use super::scalar::GaussianRational;
use super::unipoly::UniPoly;

/// Rings in which exact quotients can be computed.
pub trait ExactDiv: Ring {
    /// `self / d` when `d` divides `self`.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

impl ExactDiv for GaussianRational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|i| self * &i)
    }
}

impl ExactDiv for UniPoly {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        self.div_exact(d)
    }
}

impl ExactDiv for Poly {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        for j in c..cols {
            let v = a.get(r, j).clone() * inv.clone();
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Basis of the right nullspace `{x : m x = 0}`, one vector per free column
/// (with a one in that column), in increasing column order.
pub fn nullspace<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (a, pivots) = rref(m);
    let cols = a.cols();
    let Some(t) = a.entries().next() else {
        return Vec::new();
    };
    let (zero, one) = (t.zero_like(), t.one_like());
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -a.get(r, free).clone();
        }
        out.push(v);
    }
    out
}

/// Determinant by Gaussian elimination over a field.
pub fn det<T: Field>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows();
    let t = a.entries().next().expect("nonempty matrix").clone();
    let mut acc = t.one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return t.zero_like();
        };
        if p != c {
            a.swap_rows(p, c);
            acc = -acc;
        }
        let piv = a.get(c, c).clone();
        let inv = piv.inv().expect("nonzero pivot");
        acc = acc * piv;
        for i in c + 1..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone() * inv.clone();
            for j in c..n {
                let v = a.get(i, j).clone() - f.clone() * a.get(c, j).clone();
                a.set(i, j, v);
            }
        }
    }
    acc
}

pub fn inverse<T: Field>(m: &Matrix<T>) -> Option<Matrix<T>> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let t = m.entries().next()?.clone();
    let id = Matrix::identity_like(&t, n);
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else {
            id.get(i, j - n).clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<T: Field>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows(), b.len());
    let (rows, cols) = (m.rows(), m.cols());
    let t = m.entries().next().or(b.first())?.clone();
    let aug = Matrix::from_fn(rows, cols + 1, |i, j| {
        if j < cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![t.zero_like(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, cols).clone();
    }
    Some(x)
}

/// Fraction-free echelon elimination; returns the rank and the last pivot
/// (which is the determinant, up to sign, for a full-rank square matrix).
/// The matrix must be nonempty.
fn bareiss<T: ExactDiv>(m: &Matrix<T>) -> (usize, T, bool) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let t = a.entries().next().cloned().expect("nonempty matrix");
    let mut prev = t.one_like();
    let mut negate = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            negate = !negate;
        }
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = piv.clone() * a.get(i, j).clone() - a.get(i, c).clone() * a.get(r, j).clone();
                let v = v.exact_div(&prev).expect("Bareiss division is exact");
                a.set(i, j, v);
            }
            a.set(i, c, t.zero_like());
        }
        prev = piv;
        r += 1;
    }
    (r, prev, negate)
}

/// Rank over the fraction field, by fraction-free elimination.
pub fn bareiss_rank<T: ExactDiv>(m: &Matrix<T>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    bareiss(m).0
}

/// Determinant over an integral domain with exact division.
pub fn bareiss_det<T: ExactDiv>(m: &Matrix<T>) -> T {
    assert!(m.is_square() && m.rows() > 0, "determinant needs a nonempty square matrix");
    let (r, last, negate) = bareiss(m);
    if r < m.rows() {
        return last.zero_like();
    }
    if negate {
        -last
    } else {
        last
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::ScalarMatrix;
    use crate::algebra::poly::vars;
    use crate::algebra::PolyMatrix;

    #[test]
    fn determinant_agrees() {
        let a = ScalarMatrix::from_integers(&[&[2, 1, 3], &[0, 4, 1], &[5, 2, 0]]);
        assert_eq!(det(&a), GaussianRational::from_integer(-59));
        assert_eq!(bareiss_det(&a), GaussianRational::from_integer(-59));
        let b = ScalarMatrix::from_integers(&[&[0, 1], &[1, 0]]);
        assert_eq!(bareiss_det(&b), GaussianRational::from_integer(-1));
    }

    #[test]
    fn nullspace_and_inverse() {
        let a = ScalarMatrix::from_integers(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let b = ScalarMatrix::from_integers(&[&[1, 1], &[1, 2]]);
        let bi = inverse(&b).unwrap();
        assert!((&b * &bi).is_identity());
        assert!(inverse(&a.submatrix(&[0, 1], &[0, 1])).is_none());
    }

    #[test]
    fn polynomial_rank() {
        let v = vars(&["z"]);
        let m = PolyMatrix::parse(v.clone(), &[vec!["z", "z"], vec!["z", "z"]]).unwrap();
        assert_eq!(bareiss_rank(m.matrix()), 1);
        let m = PolyMatrix::parse(v.clone(), &[vec!["z", "0"], vec!["0", "1"]]).unwrap();
        assert_eq!(bareiss_rank(m.matrix()), 2);
        assert_eq!(bareiss_det(m.matrix()), Poly::parse(v, "z").unwrap());
    }
}
