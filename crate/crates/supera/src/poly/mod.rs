//! Exact sparse Laurent-polynomial and rational-function arithmetic over the
//! Gaussian rationals, with substitution, `q -> 1` limits, resultants, exact
//! division, unit normalization, and a text/JSON parser and printer.

mod coeff;
mod format;
mod gcd;
mod laurent;
mod monomial;
mod parser;
mod rational;
mod resultant;
mod varid;

pub use coeff::GaussRat;
pub use format::{format, from_json, plain, JsonPoly, JsonTerm, Style};
pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use parser::parse;
pub use rational::RationalFunc;
pub use resultant::{resultant, resultant_with, DEFAULT_INTERP_THRESHOLD};
pub use varid::VarId;

pub(crate) use gcd::{gcd, gcd_list};
pub(crate) use laurent::rational_pow;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("variable {var} with negative exponent bound to zero")]
    SubstituteZero { var: String },
    #[error("half exponents are not allowed on {var}")]
    HalfExponent { var: String },
    #[error("half power of {var} needs a square-root-able binding")]
    NonSquareBinding { var: String },
    #[error("pole at q = 1")]
    PoleAtQ1,
    #[error("degree zero in {var}")]
    DegreeZero { var: String },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
