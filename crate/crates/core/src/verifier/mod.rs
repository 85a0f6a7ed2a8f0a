//! Executable identity suites relating fiber counts to Kostka–Foulkes
//! polynomials and weight multiplicities, and the reports they produce.
//!
//! The central identity, for `λ ∈ P_{n,d}` and `dv ∈ Q_{n,d}`:
//!
//! ```text
//! #fiber(λ, dv)(q) = q^{|dv| - n(1^d)} Σ_{P ∈ P_{n,d}} K̃_{P,λ}(q) · K_{P',dv}
//! ```
//!
//! where `|dv|` is the flag-variety dimension and `P'` the conjugate of `P`.
//! Pairing the orbit of `P` with the weight multiplicities of the *conjugate*
//! shape is the [`Convention::Standard`] pairing; [`Convention::LiteralPaper`]
//! uses `K_{P,dv}` instead and is kept to demonstrate that it fails.

mod bootstrap;
mod combinatorial;
mod identity;
mod report;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{kostka_number, DimVector, Partition};

pub use bootstrap::{solve_integer_system, SolveError, StalkTable};
pub use combinatorial::{verify_schur_weyl, verify_young_rule};
pub use identity::{trace_rhs, FiberTable, Verifier};
pub use report::{CheckResult, ReportParams, Status, VerificationReport, Witness};
pub use suite::{run_suite, SuiteConfig, SuiteError};

/// Which shape's weight multiplicities accompany the orbit of `P`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// Weight multiplicities of `conjugate(P)`.
    #[default]
    Standard,
    /// Weight multiplicities of `P` itself.
    LiteralPaper,
}

impl Convention {
    /// Shape whose Schur functor supplies the weight multiplicities paired
    /// with the orbit of `p`.
    pub fn highest_weight(self, p: &Partition) -> Partition {
        match self {
            Convention::Standard => p.conjugate(),
            Convention::LiteralPaper => p.clone(),
        }
    }

    /// `dim V(P)_dv` under this pairing.
    pub fn weight_multiplicity(self, p: &Partition, dv: &DimVector) -> u64 {
        kostka_number(&self.highest_weight(p), dv.entries())
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Standard => "standard",
            Convention::LiteralPaper => "literal-paper",
        })
    }
}

impl FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Convention::Standard),
            "literal-paper" => Ok(Convention::LiteralPaper),
            other => Err(format!(
                "unknown convention {other:?} (expected standard or literal-paper)"
            )),
        }
    }
}

/// Whether identities are compared as polynomials or as values at primes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Polynomial,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Polynomial => "polynomial",
            Mode::Numeric => "numeric",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "polynomial" => Ok(Mode::Polynomial),
            "numeric" => Ok(Mode::Numeric),
            other => Err(format!(
                "unknown mode {other:?} (expected polynomial or numeric)"
            )),
        }
    }
}
