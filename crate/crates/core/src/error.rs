use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite intermediate while building coefficient {index}")]
    Overflow { index: usize },

    #[error("series did not reach tolerance {target:e} within {max_terms} terms (tail bound {bound:e})")]
    Convergence {
        target: f64,
        max_terms: usize,
        bound: f64,
    },

    #[error("denominator vanishes near z = {z} (|denominator| = {modulus:e})")]
    Pole { z: Complex64, modulus: f64 },

    #[error("gate `{gate}` not satisfied (value {value})")]
    Gate { gate: &'static str, value: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
