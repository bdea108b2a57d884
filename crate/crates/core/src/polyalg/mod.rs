//! Prime fields, monomials, polynomials and the polynomial text syntax.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{Coeff, PrimeField};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::{ArithOp, Poly, PolyRing};
