//! Dense matrices over any [`Ring`], and polynomial matrices with a shared
//! variable list.

use std::fmt;
use std::ops::{Add, Deref, Index, IndexMut, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::field::Ring;
use super::poly::{Poly, Vars};
use super::ratfunc::RationalFunction;
use super::scalar::GaussianRational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Size("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn column(v: Vec<T>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map<U: Clone, E>(
        &self,
        mut f: impl FnMut(&T) -> std::result::Result<U, E>,
    ) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect::<std::result::Result<_, _>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Column-major vectorisation.
    pub fn vec_column_major(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    /// Inverse of [`Matrix::vec_column_major`].
    pub fn unvec_column_major(v: &[T], rows: usize, cols: usize) -> Self {
        assert_eq!(v.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| v[i + rows * j].clone())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros_like(template: &T, rows: usize, cols: usize) -> Self {
        let z = template.zero_like();
        Self::from_fn(rows, cols, |_, _| z.clone())
    }

    pub fn identity_like(template: &T, n: usize) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Self::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn trace(&self) -> Option<T> {
        let first = self.data.first()?;
        let mut acc = first.zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i).clone();
        }
        Some(acc)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector size mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v).unwrap_or_else(|| self.get(i, 0).zero_like()))
            .collect()
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Size(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(self * o)
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols).clone() * o.get(i % o.rows, j % o.cols).clone()
        })
    }

    /// Matrix power of a square matrix.
    pub fn pow(&self, e: u32) -> Self {
        let t = self.data.first().expect("nonempty matrix");
        let mut acc = Self::identity_like(t, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn dot<T: Ring>(a: &[T], b: &[T]) -> Option<T> {
    let mut it = a.iter().zip(b);
    let (x, y) = it.next()?;
    let mut acc = x.clone() * y.clone();
    for (x, y) in it {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = acc + x.clone() * y.clone();
    }
    Some(acc)
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T: Ring> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix size mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + o.get(i, j).clone()
        })
    }
}

impl<'a, T: Ring> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix size mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - o.get(i, j).clone()
        })
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows, "matrix size mismatch");
        let ot = o.transpose();
        Matrix::from_fn(self.rows, o.cols, |i, j| {
            dot(self.row(i), ot.row(j)).expect("inner dimension must be positive")
        })
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[T]> = (0..self.rows)
            .map(|i| &self.data[i * self.cols..(i + 1) * self.cols])
            .collect();
        rows.serialize(s)
    }
}

/// Constant matrix with Gaussian-rational entries.
pub type ScalarMatrix = Matrix<GaussianRational>;

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| GaussianRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(&GaussianRational::zero(), n)
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_integer(x)).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?,
        )
    }
}

/// Matrix of polynomials over one variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    vars: Vars,
    mat: Matrix<Poly>,
}

impl PolyMatrix {
    pub fn new(vars: Vars, mat: Matrix<Poly>) -> Result<Self> {
        if let Some(p) = mat.entries().find(|p| p.vars() != &vars) {
            return Err(Error::VariableMismatch(vars.to_vec(), p.vars().to_vec()));
        }
        Ok(PolyMatrix { vars, mat })
    }

    pub fn from_fn(
        vars: Vars,
        rows: usize,
        cols: usize,
        f: impl FnMut(usize, usize) -> Poly,
    ) -> Result<Self> {
        Self::new(vars, Matrix::from_fn(rows, cols, f))
    }

    /// Parses a grid of polynomial strings.
    pub fn parse<S: AsRef<str>>(vars: Vars, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Poly::parse(vars.clone(), s.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vars, Matrix::from_rows(parsed)?)
    }

    /// Shorthand used mainly by tests: `PolyMatrix::from_strs(&["z"], &[&["z", "1"], &["0", "0"]])`.
    pub fn from_strs(vars: &[&str], rows: &[&[&str]]) -> Result<Self> {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::parse(super::poly::vars(vars), &rows)
    }

    pub fn zeros(vars: Vars, rows: usize, cols: usize) -> Self {
        let z = Poly::zero(vars.clone());
        PolyMatrix {
            vars,
            mat: Matrix::from_fn(rows, cols, |_, _| z.clone()),
        }
    }

    pub fn identity(vars: Vars, n: usize) -> Self {
        let mat = Matrix::identity_like(&Poly::zero(vars.clone()), n);
        PolyMatrix { vars, mat }
    }

    pub fn from_constant(vars: Vars, m: &ScalarMatrix) -> Self {
        let mat = m.map(|c| Poly::constant(vars.clone(), c.clone()));
        PolyMatrix { vars, mat }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn matrix(&self) -> &Matrix<Poly> {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix<Poly> {
        self.mat
    }

    pub fn is_univariate(&self) -> bool {
        self.vars.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.mat.entries().all(|p| p.is_constant())
    }

    /// Constant entries, or `NotConstant`.
    pub fn constant_value(&self) -> Result<ScalarMatrix> {
        if !self.is_constant() {
            return Err(Error::NotConstant);
        }
        Ok(self.mat.map(|p| p.constant_term()))
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<ScalarMatrix> {
        self.mat.try_map(|p| p.eval(point))
    }

    pub fn to_rational(&self) -> Matrix<RationalFunction> {
        self.mat.map(|p| RationalFunction::from_poly(p.clone()))
    }

    /// Dense univariate entries; `NotUnivariate` unless there is exactly one
    /// variable.
    pub fn to_unipoly(&self) -> Result<Matrix<UniPoly>> {
        if self.vars.len() != 1 {
            return Err(Error::NotUnivariate(self.vars.to_vec()));
        }
        Ok(self.mat.map(|p| p.to_unipoly().unwrap()))
    }

    pub fn with_vars(&self, target: &Vars) -> Result<Self> {
        Ok(PolyMatrix {
            vars: target.clone(),
            mat: self.mat.try_map(|p| p.with_vars(target))?,
        })
    }

    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Self> {
        let vars = match bindings.first() {
            Some((_, p)) => p.vars().clone(),
            None => self.vars.clone(),
        };
        Ok(PolyMatrix {
            vars,
            mat: self.mat.try_map(|p| p.substitute(bindings))?,
        })
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.mat
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|p| p.to_string()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        PolyMatrix {
            vars: self.vars.clone(),
            mat: self.mat.transpose(),
        }
    }

    pub fn try_mul(&self, o: &PolyMatrix) -> Result<Self> {
        if self.vars != o.vars {
            return Err(Error::VariableMismatch(self.vars.to_vec(), o.vars.to_vec()));
        }
        Ok(PolyMatrix {
            vars: self.vars.clone(),
            mat: self.mat.try_mul(&o.mat)?,
        })
    }
}

impl Deref for PolyMatrix {
    type Target = Matrix<Poly>;
    fn deref(&self) -> &Matrix<Poly> {
        &self.mat
    }
}

impl<'a> Add<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, o: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            vars: self.vars.clone(),
            mat: &self.mat + &o.mat,
        }
    }
}

impl<'a> Sub<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, o: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            vars: self.vars.clone(),
            mat: &self.mat - &o.mat,
        }
    }
}

impl<'a> Mul<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, o: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            vars: self.vars.clone(),
            mat: &self.mat * &o.mat,
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PolyMatrix", 2)?;
        st.serialize_field("variables", &*self.vars)?;
        st.serialize_field("matrix", &self.mat)?;
        st.end()
    }
}
