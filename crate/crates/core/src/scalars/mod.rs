//! Exact coefficient field: rational functions in `s = q^(1/2)` extended by
//! square roots of squarefree elements and a root of unity of fixed order.

pub mod json;
pub mod lpoly;
pub mod qscalar;
pub mod ratfunc;

pub use lpoly::LPoly;
pub use qscalar::{q_binom, q_int, NumericValue, QScalar, Radicand};
pub use ratfunc::RatFunc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root not representable: {0}")]
    SqrtNotRepresentable(String),
    #[error("negative radicand at evaluation point")]
    NegativeRadicand,
    #[error("denominator vanishes at s = 1")]
    PoleAtOne,
    #[error("evaluation point outside (0,1)")]
    EvalDomain,
    #[error("evaluation hit a pole at s = {at}")]
    EvalPole { at: f64 },
    #[error("incompatible cyclotomic orders {0} and {1}")]
    CyclotomicMismatch(u32, u32),
    #[error("malformed scalar payload: {0}")]
    Payload(String),
}
