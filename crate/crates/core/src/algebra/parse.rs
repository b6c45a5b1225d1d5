//! Text grammar for scalars and polynomials.
//!
//! ```text
//! polynomial := SIGN? monomial (("+"|"-") monomial)*
//! monomial   := factor ("*" factor)*
//! factor     := RAT "i"? | "i" | VAR ("^" INT)? | "(" polynomial ")" ("^" INT)?
//! RAT        := INT ("/" INT)?
//! ```
//!
//! `3/2i` is the imaginary number `(3/2)i`. A coefficient with both parts
//! such as `1+2i` parses as the sum of two monomials, which denotes the same
//! polynomial; the canonical printer parenthesises it when it multiplies
//! variables.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use super::poly::{Poly, Vars};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vars,
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_ident_char(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let n = self.integer()?;
        match u32::try_from(n) {
            Ok(v) => Ok(v),
            Err(_) => self.err("exponent too large"),
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && is_ident_char(self.src[self.pos]) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn polynomial(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.vars.clone());
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let m = self.monomial()?;
            acc = if negative { &acc - &m } else { &acc + &m };
        }
        Ok(acc)
    }

    fn monomial(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            self.small_integer()
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.polynomial()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(b) if b.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.eat(b'/') {
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                // An `i` glued to the number makes it imaginary.
                let glued_i = self.src.get(self.pos) == Some(&b'i')
                    && !self
                        .src
                        .get(self.pos + 1)
                        .is_some_and(|&c| is_ident_char(c));
                let c = if glued_i {
                    self.pos += 1;
                    GaussianRational::new(BigRational::zero(), value)
                } else {
                    GaussianRational::from_rational(value)
                };
                Ok(Poly::constant(self.vars.clone(), c))
            }
            Some(b) if is_ident_start(b) => {
                let at = self.pos;
                let name = self.ident();
                if name == "i" {
                    return Ok(Poly::constant(self.vars.clone(), GaussianRational::i()));
                }
                let v = match Poly::var(self.vars.clone(), &name) {
                    Ok(v) => v,
                    Err(_) => {
                        self.pos = at;
                        return self.err(format!("unknown variable `{name}`"));
                    }
                };
                let e = self.exponent()?;
                Ok(v.pow(e))
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_poly(vars: Vars, s: &str) -> Result<Poly> {
    if let Some(bad) = vars.iter().find(|v| *v == "i") {
        return Err(Error::Invalid(format!("`{bad}` is reserved for the imaginary unit")));
    }
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        vars,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let out = p.polynomial()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

pub fn parse_scalar(s: &str) -> Result<GaussianRational> {
    let p = parse_poly(std::sync::Arc::new(Vec::new()), s)?;
    Ok(p.constant_term())
}

/// Variable names in order of first appearance (the imaginary unit `i`
/// excluded).
pub fn scan_variables(s: &str) -> Result<Vec<String>> {
    let b = s.as_bytes();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            // glued imaginary unit
            if i < b.len() && b[i] == b'i' && !b.get(i + 1).is_some_and(|&c| is_ident_char(c)) {
                i += 1;
            }
        } else if is_ident_start(b[i]) {
            let start = i;
            while i < b.len() && is_ident_char(b[i]) {
                i += 1;
            }
            let name = &s[start..i];
            if name != "i" && !out.iter().any(|v| v == name) {
                out.push(name.to_string());
            }
        } else {
            i += 1;
        }
    }
    Ok(out)
}
