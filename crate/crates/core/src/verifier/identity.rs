use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{CheckResult, Convention, Mode, Witness};
use crate::combinatorics::{
    enumerate_dimvecs, enumerate_partitions, nilcone_dim, CombinatoricsError, DimVector, Partition,
};
use crate::flaggeo::{next_prime_after, FiberCounter, FiberPolynomial, FlagError};
use crate::qpoly::{modified_kostka_foulkes, LaurentPoly};

/// Fiber polynomials for every `(λ, dv)` of a grid, or the error that
/// prevented computing one.
pub type FiberTable = BTreeMap<(Partition, DimVector), Result<FiberPolynomial, FlagError>>;

/// Right-hand side of the trace identity:
/// `q^{|dv| - n(1^d)} Σ_P K̃_{P,λ}(q) · mult(P, dv)`.
pub fn trace_rhs(
    orbits: &[Partition],
    lambda: &Partition,
    dimvec: &DimVector,
    convention: Convention,
) -> LaurentPoly {
    let d = lambda.size();
    let shift = dimvec.flag_dim() as i64 - Partition::column(d).n_stat() as i64;
    orbits
        .iter()
        .filter_map(|p| {
            let mult = convention.weight_multiplicity(p, dimvec);
            (mult != 0).then(|| modified_kostka_foulkes(p, lambda).scale(&BigInt::from(mult)))
        })
        .sum::<LaurentPoly>()
        .shift(shift)
}

/// Runs the identity checks for one `(n, d)`.
pub struct Verifier<'a> {
    n: usize,
    d: usize,
    convention: Convention,
    primes: Option<Vec<u64>>,
    counter: &'a FiberCounter,
    orbits: Vec<Partition>,
    dimvecs: Vec<DimVector>,
    fibers: OnceLock<FiberTable>,
}

impl<'a> Verifier<'a> {
    pub fn new(n: usize, d: usize, counter: &'a FiberCounter) -> Result<Self, CombinatoricsError> {
        Ok(Verifier {
            n,
            d,
            convention: Convention::Standard,
            primes: None,
            counter,
            orbits: enumerate_partitions(n, d)?,
            dimvecs: enumerate_dimvecs(n, d)?,
            fibers: OnceLock::new(),
        })
    }

    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    /// Primes used for interpolation (polynomial mode) or evaluation
    /// (numeric mode). Without this, interpolation uses the first
    /// `bound + 1` primes per instance and numeric mode uses 2 and 3.
    pub fn with_primes(mut self, primes: Vec<u64>) -> Self {
        self.primes = Some(primes);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn counter(&self) -> &FiberCounter {
        self.counter
    }

    /// `P_{n,d}`, which labels both the Jordan types and the orbits.
    pub fn orbits(&self) -> &[Partition] {
        &self.orbits
    }

    pub fn dimvecs(&self) -> &[DimVector] {
        &self.dimvecs
    }

    fn pairs(&self) -> Vec<(Partition, DimVector)> {
        self.orbits
            .iter()
            .flat_map(|l| self.dimvecs.iter().map(move |v| (l.clone(), v.clone())))
            .collect()
    }

    /// Interpolated fiber polynomials over the whole grid, computed once.
    pub fn fiber_table(&self) -> &FiberTable {
        self.fibers.get_or_init(|| {
            let primes = self.primes.as_deref();
            self.pairs()
                .into_par_iter()
                .map(|(l, v)| {
                    let fp = self.counter.fiber_polynomial(&l, &v, primes);
                    ((l, v), fp)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect()
        })
    }

    /// Primes actually used for interpolation across the grid.
    pub fn interpolation_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .fiber_table()
            .values()
            .filter_map(|r| r.as_ref().ok())
            .flat_map(FiberPolynomial::primes)
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    pub fn numeric_primes(&self) -> Vec<u64> {
        self.primes.clone().unwrap_or_else(|| vec![2, 3])
    }

    pub fn rhs(&self, lambda: &Partition, dimvec: &DimVector) -> LaurentPoly {
        trace_rhs(&self.orbits, lambda, dimvec, self.convention)
    }

    /// The trace identity over every `(λ, dv)`. In polynomial mode each
    /// equality is also re-checked at a prime not used for interpolation.
    pub fn verify_trace_identity(&self, mode: Mode) -> CheckResult {
        let pairs = self.pairs();
        let witnesses: Vec<Witness> = match mode {
            Mode::Polynomial => pairs
                .par_iter()
                .flat_map_iter(|(l, v)| self.trace_case_polynomial(l, v))
                .collect(),
            Mode::Numeric => {
                let primes = self.numeric_primes();
                pairs
                    .par_iter()
                    .flat_map_iter(|(l, v)| self.trace_case_numeric(l, v, &primes))
                    .collect()
            }
        };
        CheckResult::from_witnesses("trace_identity", pairs.len(), witnesses)
    }

    fn trace_case_polynomial(&self, l: &Partition, v: &DimVector) -> Vec<Witness> {
        let rhs = self.rhs(l, v);
        let fp = match &self.fiber_table()[&(l.clone(), v.clone())] {
            Ok(fp) => fp,
            Err(e) => return vec![Witness::at(l, v).sides("error", &rhs).detail(e.to_string())],
        };
        if fp.poly != rhs {
            return vec![Witness::at(l, v).sides(&fp.poly, &rhs)];
        }
        let fresh = next_prime_after(fp.primes().into_iter().max().unwrap_or(1));
        match self.counter.fiber_count(l, v, fresh) {
            Ok(r) => {
                let count = BigRational::from_integer(BigInt::from(r.count));
                let value = rhs.eval_u64(fresh);
                if count != value {
                    vec![Witness::at(l, v)
                        .with_q(fresh)
                        .sides(r.count, value)
                        .detail("spot check at a prime not used for interpolation")]
                } else {
                    Vec::new()
                }
            }
            Err(e) => vec![Witness::at(l, v).with_q(fresh).detail(e.to_string())],
        }
    }

    fn trace_case_numeric(&self, l: &Partition, v: &DimVector, primes: &[u64]) -> Vec<Witness> {
        let rhs = self.rhs(l, v);
        let mut out = Vec::new();
        for &p in primes {
            match self.counter.fiber_count(l, v, p) {
                Ok(r) => {
                    let value = rhs.eval_u64(p);
                    if BigRational::from_integer(BigInt::from(r.count)) != value {
                        out.push(Witness::at(l, v).with_q(p).sides(r.count, value));
                    }
                }
                Err(e) => out.push(Witness::at(l, v).with_q(p).detail(e.to_string())),
            }
        }
        out
    }

    /// Degree bounds: `deg ≤ |dv| - dim O_λ / 2` per component, and
    /// `deg ≤ (dim N_{n,d} - dim O_λ) / 2` globally.
    pub fn verify_semismall(&self) -> CheckResult {
        let nilcone = nilcone_dim(self.n, self.d).expect("validated in new") as i64;
        let mut witnesses = Vec::new();
        for ((l, v), fp) in self.fiber_table() {
            let fp = match fp {
                Ok(fp) => fp,
                Err(e) => {
                    witnesses.push(Witness::at(l, v).detail(e.to_string()));
                    continue;
                }
            };
            let Some(deg) = fp.poly.degree() else {
                continue;
            };
            let component = fp.degree_bound;
            let global = (nilcone - l.orbit_dim() as i64) / 2;
            if deg > component || deg > global {
                witnesses.push(Witness::at(l, v).sides(deg, component.min(global)).detail(
                    format!("degree {deg}, component bound {component}, global bound {global}"),
                ));
            }
        }
        CheckResult::from_witnesses("semismall", self.fiber_table().len(), witnesses)
    }

    /// The coefficient at the semi-small bound degree equals the weight
    /// multiplicity `dim V(λ)_dv`.
    pub fn verify_top_components(&self) -> CheckResult {
        let mut witnesses = Vec::new();
        for ((l, v), fp) in self.fiber_table() {
            let fp = match fp {
                Ok(fp) => fp,
                Err(e) => {
                    witnesses.push(Witness::at(l, v).detail(e.to_string()));
                    continue;
                }
            };
            let top = fp.top_coefficient();
            let mult = BigInt::from(self.convention.weight_multiplicity(l, v));
            if top != mult {
                witnesses.push(Witness::at(l, v).sides(&top, &mult).detail(format!(
                    "coefficient of q^{} in {}",
                    fp.degree_bound, fp.poly
                )));
            }
        }
        CheckResult::from_witnesses("top_components", self.fiber_table().len(), witnesses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn dv(s: &str) -> DimVector {
        s.parse().unwrap()
    }

    #[test]
    fn rhs_examples() {
        let p22 = enumerate_partitions(2, 2).unwrap();
        assert_eq!(
            trace_rhs(&p22, &p("1,1"), &dv("1,1"), Convention::Standard).to_string(),
            "q+1"
        );
        assert!(trace_rhs(&p22, &p("2"), &dv("2,0"), Convention::Standard).is_zero());
        assert_eq!(
            trace_rhs(&p22, &p("2"), &dv("2,0"), Convention::LiteralPaper).to_string(),
            "q^-1"
        );
        let p33 = enumerate_partitions(3, 3).unwrap();
        assert_eq!(
            trace_rhs(&p33, &p("2,1"), &dv("1,1,1"), Convention::Standard).to_string(),
            "2q+1"
        );
    }

    #[test]
    fn small_grid_passes() {
        let counter = FiberCounter::new();
        let v = Verifier::new(2, 3, &counter).unwrap();
        for mode in [Mode::Polynomial, Mode::Numeric] {
            let r = v.verify_trace_identity(mode);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.cases, 8);
        }
        assert!(v.verify_semismall().passed());
        assert!(v.verify_top_components().passed());
        assert_eq!(v.interpolation_primes(), vec![2, 3, 5]);
    }

    #[test]
    fn literal_pairing_fails_with_witness() {
        let counter = FiberCounter::new();
        let v = Verifier::new(2, 2, &counter)
            .unwrap()
            .with_convention(Convention::LiteralPaper);
        let r = v.verify_trace_identity(Mode::Polynomial);
        assert!(!r.passed());
        assert!(r.has_witness(&p("2"), &dv("2,0")));
    }
}
