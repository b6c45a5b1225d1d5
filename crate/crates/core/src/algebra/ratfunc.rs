//! Quotients of polynomials.
//!
//! Univariate quotients are fully reduced (gcd removed, monic denominator).
//! Multivariate ones only get cheap normalisation: a monomial common factor
//! is cancelled, exact division is tried, and the denominator is scaled to
//! leading coefficient one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::field::{Field, Ring};
use super::jet::Jet;
use super::poly::{Monomial, Poly, Vars};
use super::scalar::GaussianRational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.vars() != den.vars() {
            return Err(Error::VariableMismatch(num.vars().to_vec(), den.vars().to_vec()));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.vars().clone());
        RationalFunction { num: p, den }
    }

    pub fn zero(vars: Vars) -> Self {
        Self::from_poly(Poly::zero(vars))
    }

    pub fn one(vars: Vars) -> Self {
        Self::from_poly(Poly::one(vars))
    }

    pub fn constant(vars: Vars, c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(vars, c))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let vars = num.vars().clone();
        if num.is_zero() {
            return Self::zero(vars);
        }
        if den.is_constant() {
            let c = den.constant_term().inv().expect("nonzero denominator");
            return Self::from_poly(num.scale(&c));
        }
        let (num, den) = if vars.len() == 1 {
            return Self::normalized_uni(num.to_unipoly().unwrap(), den.to_unipoly().unwrap(), &vars);
        } else {
            if let Some(q) = num.div_exact(&den) {
                return Self::from_poly(q);
            }
            let g = common_monomial(&num, &den);
            if g.degree() > 0 {
                let gp = Poly::from_terms(vars.clone(), [(g, GaussianRational::one())]);
                (num.div_exact(&gp).unwrap(), den.div_exact(&gp).unwrap())
            } else {
                (num, den)
            }
        };
        let lc = den.leading_term().unwrap().1.inv().unwrap();
        let (num, den) = (num.scale(&lc), den.scale(&lc));
        RationalFunction { num, den }
    }

    /// Reduced quotient of univariate polynomials in the variable `vars[0]`.
    fn normalized_uni(nu: UniPoly, du: UniPoly, vars: &Vars) -> Self {
        if nu.is_zero() {
            return Self::zero(vars.clone());
        }
        let g = UniPoly::gcd(&nu, &du);
        let (mut nu, mut du) = if g.is_constant() {
            (nu, du)
        } else {
            (nu.div_exact(&g).unwrap(), du.div_exact(&g).unwrap())
        };
        let lc = du.lc();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            nu = nu.scale(&inv);
            du = du.scale(&inv);
        }
        RationalFunction { num: Poly::from_unipoly_in(&nu, vars), den: Poly::from_unipoly_in(&du, vars) }
    }

    /// `self − c·x` with a single normalisation.
    pub fn sub_mul(&self, c: &RationalFunction, x: &RationalFunction) -> RationalFunction {
        if c.is_zero() || x.is_zero() {
            return self.clone();
        }
        if let (Some((a, b)), Some((cn, cd)), Some((xn, xd))) = (self.unis(), c.unis(), x.unis()) {
            let pd = &cd * &xd;
            let pn = &cn * &xn;
            if b == pd {
                return RationalFunction::normalized_uni(&a - &pn, b, self.vars());
            }
            let num = &(&a * &pd) - &(&pn * &b);
            return RationalFunction::normalized_uni(num, &b * &pd, self.vars());
        }
        self - &(c * x)
    }

    /// Numerator and denominator as univariate polynomials.
    fn unis(&self) -> Option<(UniPoly, UniPoly)> {
        if self.vars().len() != 1 {
            return None;
        }
        Some((self.num.to_unipoly()?, self.den.to_unipoly()?))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(&self.num.eval(point)? / &d)
    }

    /// True when the denominator does not vanish at `point`.
    pub fn is_regular_at(&self, point: &[GaussianRational]) -> bool {
        self.den.eval(point).is_ok_and(|d| !d.is_zero())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Self> {
        Self::new(self.num.substitute(bindings)?, self.den.substitute(bindings)?)
    }

    /// Univariate: `f(x + a)`.
    pub fn shift(&self, a: &GaussianRational) -> Self {
        assert_eq!(self.vars().len(), 1, "shift needs a univariate function");
        let vars = self.vars().clone();
        let x = Poly::var(vars.clone(), &vars[0]).unwrap();
        let image = &x + &Poly::constant(vars.clone(), a.clone());
        self.substitute(&[(vars[0].as_str(), image)]).unwrap()
    }

    /// Univariate order of vanishing at the origin (negative for a pole);
    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let n = self.num.to_unipoly()?.valuation()? as i64;
        let d = self.den.to_unipoly()?.valuation()? as i64;
        Some(n - d)
    }

    /// Series expansion at the origin truncated at total degree `order`.
    pub fn to_jet(&self, order: u32) -> Result<Jet> {
        let d = Jet::from_poly(&self.den, order).inverse()?;
        Ok(&Jet::from_poly(&self.num, order) * &d)
    }
}

fn common_monomial(a: &Poly, b: &Poly) -> Monomial {
    let n = a.nvars();
    let mut e: Option<Vec<u32>> = None;
    for (m, _) in a.terms().chain(b.terms()) {
        e = Some(match e {
            None => m.exps().to_vec(),
            Some(v) => v.iter().zip(m.exps()).map(|(x, y)| *x.min(y)).collect(),
        });
    }
    Monomial::new(e.unwrap_or_else(|| vec![0; n]))
}

/// Rational function as a truncated power series at the origin.
pub fn rational_to_jet(f: &RationalFunction, order: u32) -> Result<Jet> {
    f.to_jet(order)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::normalized(&self.num + &o.num, self.den.clone());
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if let (Some((a, b)), Some((c, d))) = (self.unis(), o.unis()) {
            let num = &(&a * &d) + &(&c * &b);
            return RationalFunction::normalized_uni(num, &b * &d, self.vars());
        }
        RationalFunction::normalized(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero(self.vars().clone());
        }
        if self.is_polynomial() && o.is_polynomial() {
            return RationalFunction::from_poly(&self.num * &o.num);
        }
        if let (Some((a, b)), Some((c, d))) = (self.unis(), o.unis()) {
            return RationalFunction::normalized_uni(&a * &c, &b * &d, self.vars());
        }
        RationalFunction::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.vars().clone())
    }
    fn one_like(&self) -> Self {
        Self::one(self.vars().clone())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self)
    }
}
