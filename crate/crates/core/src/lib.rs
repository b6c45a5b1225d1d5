//! Exact local similarity of polynomial matrix families.
//!
//! The crate works with matrices whose entries are polynomials over the
//! Gaussian rationals `Q(i)`. Everything is exact except the few places where
//! roots are located numerically, and those results are re-certified exactly.

pub mod algebra;
pub mod error;
pub mod jordan;
pub mod rigidity;
pub mod similarity;
pub mod smith;
pub mod sylvester;

pub use algebra::{
    generic_rank, rational_to_jet, vars, GaussianRational, Jet, Matrix, Monomial, Poly,
    PolyMatrix, RationalFunction, ScalarMatrix, UniPoly,
};
pub use error::{Error, Result};
