//! Exact sparse multivariate polynomials over the rationals.

pub(crate) mod division;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use division::{divide, reduce, spoly, Division};
pub use monomial::{default_names, Monomial};
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_monomial;
pub use polynomial::{rat, Coeff, Polynomial, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("invalid variable permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("unknown monomial order '{0}'")]
    UnknownOrder(String),
    #[error("variable index {0} out of range for {1} variables")]
    VariableOutOfRange(usize, usize),
    #[error("variable x{} still occurs", .0 + 1)]
    VariableOccurs(usize),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
