//! Sparse multivariate polynomials over the Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num::Zero;
use serde::{Serialize, Serializer};

use super::field::Ring;
use super::scalar::GaussianRational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Ordered variable names shared between polynomials of one family.
pub type Vars = Arc<Vec<String>>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect())
}

/// Exponent vector ordered graded-lexicographically (total degree first,
/// then the exponent of the first variable, and so on).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial {
            deg: exps.iter().sum(),
            exps,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + o.deg,
            exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial::new(o.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect())
    }

    /// All exponent vectors in `nvars` variables of total degree at most
    /// `max_deg`, in ascending graded-lex order.
    pub fn all_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
        fn rec(rest: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for e in 0..=budget {
                cur.push(e);
                rec(rest - 1, budget - e, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(nvars, max_deg, &mut Vec::new(), &mut raw);
        let mut ms: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
        ms.sort();
        ms
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero(vars: Vars) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: GaussianRational) -> Self {
        let n = vars.len();
        Self::from_terms(vars, [(Monomial::one(n), c)])
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    pub fn from_integer(vars: Vars, c: i64) -> Self {
        Self::constant(vars, GaussianRational::from_integer(c))
    }

    pub fn var(vars: Vars, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnboundVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::from_terms(vars, [(Monomial::new(e), GaussianRational::one())]))
    }

    pub fn monomial(vars: Vars, c: GaussianRational, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        Self::from_terms(vars, [(Monomial::new(exps), c)])
    }

    /// Builds a polynomial, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut map: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.exps.len(), vars.len(), "exponent vector length");
            let slot = map.entry(m).or_default();
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars, terms: map }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.deg == 0)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.deg)
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.deg)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    fn same_vars(&self, o: &Poly) {
        assert!(
            self.vars == o.vars,
            "polynomial variable lists differ: {:?} vs {:?}",
            self.vars,
            o.vars
        );
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keeps only terms of total degree at most `n`.
    pub fn truncate(&self, n: u32) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.deg <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.nvars() {
            return Err(Error::Arity {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes a polynomial for every variable. All bound polynomials
    /// must share one variable list, which becomes the variable list of the
    /// result.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Poly> {
        let target = match bindings.first() {
            Some((_, p)) => p.vars.clone(),
            None if self.nvars() == 0 => self.vars.clone(),
            None => return Err(Error::UnboundVariable(self.vars[0].clone())),
        };
        if let Some((_, p)) = bindings.iter().find(|(_, p)| p.vars != target) {
            return Err(Error::VariableMismatch(
                target.to_vec(),
                p.vars.to_vec(),
            ));
        }
        let images: Vec<&Poly> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(name, _)| name == v)
                    .map(|(_, p)| p)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        let mut pow_cache: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target.clone()), (*p).clone()])
            .collect();
        let mut acc = Poly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target.clone(), c.clone());
            for (k, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pow_cache[k].len() <= e as usize {
                    let next = &pow_cache[k][pow_cache[k].len() - 1] * images[k];
                    pow_cache[k].push(next);
                }
                t = &t * &pow_cache[k][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial over a variable list that contains all of
    /// its variables (by name).
    pub fn with_vars(&self, target: &Vars) -> Result<Poly> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| Error::VariableMismatch(self.vars.to_vec(), target.to_vec()))
            })
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exps.iter().enumerate() {
                e[map[i]] = x;
            }
            (Monomial::new(e), c.clone())
        });
        Ok(Poly::from_terms(target.clone(), terms))
    }

    /// Dense univariate view for polynomials in at most one variable.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        match self.nvars() {
            0 => Some(UniPoly::constant(self.constant_term())),
            1 => {
                let deg = self.total_degree().unwrap_or(0) as usize;
                let mut v = vec![GaussianRational::zero(); deg + 1];
                for (m, c) in &self.terms {
                    v[m.exps[0] as usize] = c.clone();
                }
                Some(UniPoly::new(v))
            }
            _ => None,
        }
    }

    pub fn from_unipoly(u: &UniPoly, var: &str) -> Poly {
        Self::from_unipoly_in(u, &vars(&[var]))
    }

    /// `vars` must have exactly one entry.
    pub fn from_unipoly_in(u: &UniPoly, vars: &Vars) -> Poly {
        assert_eq!(vars.len(), 1);
        Poly::from_terms(
            vars.clone(),
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(vec![i as u32]), c.clone())),
        )
    }

    /// Exact quotient by multivariate long division under graded-lex order;
    /// `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        self.same_vars(d);
        let (dm, dc) = d.leading_term()?;
        let (dm, dc_inv) = (dm.clone(), dc.inv()?);
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc * &dc_inv;
            let t = Poly::from_terms(self.vars.clone(), [(qm.clone(), qc.clone())]);
            rem = &rem - &(&t * d);
            quot.insert(qm, qc);
        }
        Some(Poly {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    pub fn parse(vars: Vars, s: &str) -> Result<Poly> {
        super::parse::parse_poly(vars, s)
    }

    /// Parses with variables inferred from the text, in order of appearance.
    pub fn parse_infer(s: &str) -> Result<Poly> {
        let names = super::parse::scan_variables(s)?;
        super::parse::parse_poly(Arc::new(names), s)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut text = String::new();
            if m.deg == 0 {
                text.push_str(&c.to_string());
            } else {
                if *c == GaussianRational::one() {
                } else if *c == -GaussianRational::one() {
                    text.push('-');
                } else if !c.re().is_zero() && !c.im().is_zero() {
                    text.push_str(&format!("({c})*"));
                } else {
                    text.push_str(&format!("{c}*"));
                }
                let factors: Vec<String> = self
                    .vars
                    .iter()
                    .zip(&m.exps)
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                    .collect();
                text.push_str(&factors.join("*"));
            }
            if idx > 0 && !text.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{text}")?;
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Poly> {
        Poly::parse_infer(s)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.same_vars(o);
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            match terms.get_mut(m) {
                Some(slot) => {
                    *slot = &*slot + c;
                    if slot.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.same_vars(o);
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            match terms.get_mut(m) {
                Some(slot) => {
                    *slot = &*slot - c;
                    if slot.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), -c);
                }
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.same_vars(o);
        let mut terms: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                let slot = terms.entry(m).or_default();
                *slot = &*slot + &c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.vars.clone())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.vars.clone())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zw() -> Vars {
        vars(&["z", "w"])
    }

    fn p(s: &str) -> Poly {
        Poly::parse(zw(), s).unwrap()
    }

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        let z = vars(&["z"]);
        let a = Poly::parse(z.clone(), "z^2+1").unwrap();
        assert_eq!(a.eval(&[g("2")]).unwrap(), g("5"));
        assert_eq!(p("z*w").eval(&[g("0"), g("7")]).unwrap(), g("0"));
        let c = Poly::parse(z, "z^3+i*z").unwrap();
        assert_eq!(c.eval(&[g("i")]).unwrap(), g("-1-i"));
        assert!(matches!(
            p("z").eval(&[g("1")]),
            Err(Error::Arity { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn substitute_examples() {
        let t = vars(&["t"]);
        let z = vars(&["z"]);
        let tt = Poly::var(t.clone(), "t").unwrap();
        let a = Poly::parse(z.clone(), "z^3").unwrap();
        assert_eq!(
            a.substitute(&[("z", tt.pow(3))]).unwrap(),
            Poly::parse(t.clone(), "t^9").unwrap()
        );
        let id = Poly::var(z.clone(), "z").unwrap();
        assert_eq!(id.substitute(&[("z", id.clone())]).unwrap(), id);
        let b = p("z^2*w^2");
        assert_eq!(
            b.substitute(&[("z", tt.pow(3)), ("w", tt.pow(4))]).unwrap(),
            Poly::parse(t, "t^14").unwrap()
        );
        assert!(matches!(
            b.substitute(&[("z", tt.pow(3))]),
            Err(Error::UnboundVariable(_))
        ));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("1+z^2*w^2-3/2*z").to_string(), "z^2*w^2-3/2*z+1");
        assert_eq!(p("w+z").to_string(), "z+w");
        assert_eq!(p("-z").to_string(), "-z");
        assert_eq!(p("(1-2i)*z+i").to_string(), "(1-2i)*z+i");
        assert_eq!(p("-i*z - 1 - i").to_string(), "-i*z-1-i");
        assert_eq!(p("1/2i*w").to_string(), "1/2i*w");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("z - z").to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p("z^2-w^2");
        let b = p("z+w");
        assert_eq!(a.div_exact(&b).unwrap(), p("z-w"));
        assert!(p("z^2+w").div_exact(&b).is_none());
    }

    #[test]
    fn monomials_up_to() {
        let ms = Monomial::all_up_to(2, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Monomial::one(2));
        assert_eq!(ms[5].exps(), &[2, 0]);
    }
}
