use rayon::prelude::*;
use thiserror::Error;

use super::{
    verify_schur_weyl, verify_young_rule, CheckResult, Convention, Mode, ReportParams,
    VerificationReport, Verifier,
};
use crate::combinatorics::CombinatoricsError;
use crate::flaggeo::{FiberCounter, FlagError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Parameters(#[from] CombinatoricsError),
    /// A count could not be completed within the configured limits.
    #[error(transparent)]
    Resource(FlagError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub d: usize,
    pub mode: Mode,
    /// Interpolation primes (polynomial mode) or evaluation points (numeric
    /// mode). `None` selects the defaults described on [`Verifier::with_primes`].
    pub primes: Option<Vec<u64>>,
    pub convention: Convention,
}

impl SuiteConfig {
    pub fn new(n: usize, d: usize) -> Self {
        SuiteConfig {
            n,
            d,
            ..Default::default()
        }
    }
}

/// Computes every count the run needs and returns the first error that
/// reflects a limit rather than a mathematical failure.
fn resource_error(verifier: &Verifier<'_>, mode: Mode) -> Option<FlagError> {
    match mode {
        Mode::Polynomial => verifier
            .fiber_table()
            .values()
            .find_map(|r| r.as_ref().err().filter(|e| e.is_resource()).cloned()),
        Mode::Numeric => {
            let primes = verifier.numeric_primes();
            let mut jobs = Vec::new();
            for l in verifier.orbits() {
                for v in verifier.dimvecs() {
                    jobs.extend(primes.iter().map(|&p| (l, v, p)));
                }
            }
            let results: Vec<Option<FlagError>> = jobs
                .into_par_iter()
                .map(|(l, v, p)| {
                    verifier
                        .counter()
                        .fiber_count(l, v, p)
                        .err()
                        .filter(FlagError::is_resource)
                })
                .collect();
            results.into_iter().flatten().next()
        }
    }
}

/// Runs every check for `config`. In numeric mode the checks that need
/// whole polynomials are reported as skipped. Exhausting the budget or a
/// cache failure aborts the run instead of producing a report.
pub fn run_suite(
    config: &SuiteConfig,
    counter: &FiberCounter,
) -> Result<VerificationReport, SuiteError> {
    let mut verifier =
        Verifier::new(config.n, config.d, counter)?.with_convention(config.convention);
    if let Some(ps) = &config.primes {
        verifier = verifier.with_primes(ps.clone());
    }
    if let Some(e) = resource_error(&verifier, config.mode) {
        return Err(SuiteError::Resource(e));
    }

    let mut checks = vec![verifier.verify_trace_identity(config.mode)];
    let primes = match config.mode {
        Mode::Polynomial => {
            let (bootstrap, table) = verifier.verify_bootstrap();
            checks.push(bootstrap);
            checks.push(match table {
                Some(t) => verifier.verify_stalk_hypothesis(&t),
                None => CheckResult::skipped(
                    "stalk_hypothesis",
                    "stalk bootstrap did not produce a table",
                ),
            });
            checks.push(verifier.verify_semismall());
            checks.push(verifier.verify_top_components());
            config
                .primes
                .clone()
                .unwrap_or_else(|| verifier.interpolation_primes())
        }
        Mode::Numeric => {
            for name in [
                "stalk_bootstrap",
                "stalk_hypothesis",
                "semismall",
                "top_components",
            ] {
                checks.push(CheckResult::skipped(name, "requires polynomial mode"));
            }
            verifier.numeric_primes()
        }
    };
    let mut primes = primes;
    primes.sort_unstable();
    primes.dedup();
    checks.push(verify_schur_weyl(config.n, config.d));
    checks.push(verify_young_rule(config.d));

    let params = ReportParams {
        n: config.n,
        d: config.d,
        mode: config.mode,
        primes,
        convention: config.convention,
    };
    Ok(VerificationReport::new(params, checks))
}
