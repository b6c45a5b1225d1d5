//! Minimal ring/field abstractions used by the generic matrix routines.
//!
//! Elements of a polynomial ring carry their variable list, so there is no
//! context-free `zero()`; every constructor takes a template element instead.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self.clone() * o)
    }
}
