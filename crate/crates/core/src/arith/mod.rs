//! Exact coefficient domains.

mod half_laurent;
mod lg_scalar;
mod multipoly;
mod ratfunc;
mod zj;

pub use half_laurent::{Exp2, HalfLaurent};
pub use lg_scalar::{y_squared, LGScalar, Laurent};
pub use multipoly::{Mono, MultiPoly};
pub use ratfunc::RatFunc;
pub use zj::{QJ, ZJ};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the specialization point")]
    VanishingDenominator,
    #[error("parse error: {0}")]
    Parse(String),
}
