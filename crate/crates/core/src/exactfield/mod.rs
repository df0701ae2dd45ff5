//! Exact arithmetic in ℚ(√d), polynomials in `q` over it, reduced rational
//! functions and small dense matrices of those.

mod matrix;
mod parse;
mod poly;
mod quad;
mod ratfunc;

pub use matrix::MatrixRF;
pub use parse::parse_poly;
pub use poly::{poly_divmod, poly_mul, Poly, PolyRepr};
pub use quad::{quad_arith, QuadOp, QuadRational, SUPPORTED_SURDS};
pub use ratfunc::{ratfunc_reduce, RatFunc};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("cannot combine values over Q(sqrt{left}) and Q(sqrt{right})")]
    MismatchedSurd { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported surd {0}; expected 1, 2 or 3")]
    UnsupportedSurd(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand used throughout tests and data tables.
pub fn rf(src: &str, d: u32) -> Result<RatFunc, FieldError> {
    parse_poly(src, d).map(RatFunc::from_poly)
}
