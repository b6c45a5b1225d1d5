//! Multivariate power series truncated at a total degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Ring;
use super::poly::{Monomial, Poly, Vars};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    vars: Vars,
    order: u32,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Jet {
    pub fn zero(vars: Vars, order: u32) -> Self {
        Jet {
            vars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vars, order: u32) -> Self {
        Self::from_poly(&Poly::one(vars), order)
    }

    pub fn from_poly(p: &Poly, order: u32) -> Self {
        Jet {
            vars: p.vars().clone(),
            order,
            terms: p
                .terms()
                .filter(|(m, _)| m.degree() <= order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    fn check(&self, o: &Jet) {
        assert!(
            self.vars == o.vars && self.order == o.order,
            "jets differ in variables or order"
        );
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.vars.clone(), self.order);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Jet> {
        let c0 = self.constant_term();
        let c0_inv = c0.inv().ok_or(Error::DenominatorVanishes)?;
        // self = c0 (1 - g) with g free of constant term, so
        // self^{-1} = c0^{-1} (1 + g + g^2 + ... + g^order).
        let one = Jet::one(self.vars.clone(), self.order);
        let g = &one - &self.scale(&c0_inv);
        let mut acc = one.clone();
        for _ in 0..self.order {
            acc = &one + &(&g * &acc);
        }
        Ok(acc.scale(&c0_inv))
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.to_poly(), self.order + 1)
    }
}

impl<'a> Add<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        self.check(o);
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let slot = terms.entry(m.clone()).or_default();
            *slot = &*slot + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Jet {
            vars: self.vars.clone(),
            order: self.order,
            terms,
        }
    }
}

impl<'a> Sub<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Jet> for &'a Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        self.check(o);
        let mut terms: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                if ma.degree() + mb.degree() > self.order {
                    // terms are sorted by degree, so the rest is truncated too
                    break;
                }
                let slot = terms.entry(ma.mul(mb)).or_default();
                *slot = &*slot + &(ca * cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Jet {
            vars: self.vars.clone(),
            order: self.order,
            terms,
        }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Jet {
            type Output = Jet;
            fn $m(self, o: Jet) -> Jet { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Ring for Jet {
    fn zero_like(&self) -> Self {
        Jet::zero(self.vars.clone(), self.order)
    }
    fn one_like(&self) -> Self {
        Jet::one(self.vars.clone(), self.order)
    }
    fn is_zero(&self) -> bool {
        Jet::is_zero(self)
    }
}
