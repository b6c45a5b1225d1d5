//! Dense univariate polynomials over the Gaussian rationals.
//!
//! This is the workhorse behind local valuations, gcds and root isolation;
//! the sparse multivariate [`Poly`](super::Poly) converts to it whenever only
//! one variable is involved.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Ring;
use super::scalar::GaussianRational;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    /// `(x - a)`
    pub fn linear_root(a: &GaussianRational) -> Self {
        Self::new(vec![-a, GaussianRational::one()])
    }

    pub fn monomial(c: GaussianRational, deg: usize) -> Self {
        let mut v = vec![GaussianRational::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn from_integers(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| GaussianRational::from_integer(x)).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> GaussianRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &GaussianRational::from_integer(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Order of vanishing at `0`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Order of vanishing at `a`.
    pub fn valuation_at(&self, a: &GaussianRational) -> Option<usize> {
        if a.is_zero() {
            return self.valuation();
        }
        self.taylor_shift(a).valuation()
    }

    /// `p(x + a)`
    pub fn taylor_shift(&self, a: &GaussianRational) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        // Horner with the linear polynomial (x + a).
        let lin = Self::new(vec![a.clone(), GaussianRational::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Divide by `x^k`; assumes the low coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![GaussianRational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lc = d.lc().inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_constant() {
            let (q, r) = self.div_rem(d);
            return r.is_zero().then_some(q);
        }
        super::zpoly::div_exact(self, d)
    }

    /// Monic gcd (zero iff both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        super::zpoly::gcd(a, b)
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = Self::gcd(self, &self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's squarefree decomposition: pairwise coprime monic `f_k` with
    /// `self = lc · Π f_k^k`; only nonconstant factors are returned.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let a = self.monic();
        let mut c = Self::gcd(&a, &a.derivative());
        let mut w = a.div_exact(&c).expect("gcd divides");
        let mut k = 1;
        while !c.is_constant() {
            let y = Self::gcd(&w, &c);
            let z = w.div_exact(&y).expect("gcd divides");
            if !z.is_constant() {
                out.push((z, k));
            }
            k += 1;
            c = c.div_exact(&y).expect("gcd divides");
            w = y;
        }
        if !w.is_constant() {
            out.push((w, k));
        }
        out
    }

    /// Multiply by a common denominator so that all coefficients become
    /// Gaussian integers.
    pub fn clear_denominators(&self) -> Self {
        let mut l = num::BigInt::from(1);
        for c in &self.coeffs {
            l = num::integer::lcm(l, c.denominator_lcm());
        }
        self.scale(&GaussianRational::from_rational(num::BigRational::from_integer(l)))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = super::Poly::from_unipoly(self, "x");
        write!(f, "{p}")
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        if self.coeffs.len() > 2 && o.coeffs.len() > 2 {
            return super::zpoly::mul(self, o);
        }
        let mut v = vec![GaussianRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}
