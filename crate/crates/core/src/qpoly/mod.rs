//! Exact integer Laurent polynomials in `q` and the q-analogues built on them.

mod charge;
mod gaussian;
mod interpolate;
mod laurent;

use thiserror::Error;

pub use charge::{charge, charge_of_word, kostka_foulkes, modified_kostka_foulkes};
pub use gaussian::{gaussian_binomial, gaussian_binomial_at};
pub use interpolate::interpolate;
pub use laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot parse {0:?} as a Laurent polynomial")]
    Parse(String),
    #[error("charge needs partition content, got {0:?}")]
    ContentNotPartition(Vec<usize>),
    #[error("need {needed} distinct sample points, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("two different values sampled at q={0}")]
    ConflictingSamples(String),
    #[error("interpolated coefficient of q^{exponent} is {value}, not an integer")]
    NonIntegral { exponent: usize, value: String },
    #[error("samples do not fit a polynomial of degree <= {degree_bound} (mismatch at q={at})")]
    DegreeBoundViolated { degree_bound: usize, at: String },
}
