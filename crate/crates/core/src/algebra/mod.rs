//! Exact arithmetic: scalars, polynomials, rational functions, jets and
//! matrices over them.

pub mod charpoly;
pub mod field;
pub mod jet;
pub mod linalg;
pub mod matrix;
pub mod parse;
pub mod pid;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
pub mod unipoly;
mod zpoly;

pub use field::{Field, Ring};
pub use jet::Jet;
pub use matrix::{Matrix, PolyMatrix, ScalarMatrix};
pub use poly::{vars, Monomial, Poly, Vars};
pub use ratfunc::{rational_to_jet, RationalFunction};
pub use scalar::GaussianRational;
pub use unipoly::UniPoly;

/// Rank of a polynomial matrix over the field of fractions of its entries.
pub fn generic_rank(m: &PolyMatrix) -> usize {
    linalg::bareiss_rank(m.matrix())
}
