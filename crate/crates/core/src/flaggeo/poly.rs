use num_bigint::BigInt;

use super::{first_primes, FiberCounter, FlagError};
use crate::combinatorics::{DimVector, Partition};
use crate::qpoly::{interpolate, LaurentPoly};

/// A fiber-count polynomial together with the data it was fitted from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberPolynomial {
    pub lambda: Partition,
    pub dimvec: DimVector,
    /// `flag_dim(dimvec) - orbit_dim(lambda)/2`; negative means the fiber is
    /// empty.
    pub degree_bound: i64,
    pub samples: Vec<(u64, u64)>,
    pub poly: LaurentPoly,
}

impl FiberPolynomial {
    pub fn primes(&self) -> Vec<u64> {
        self.samples.iter().map(|&(p, _)| p).collect()
    }

    /// Coefficient at the semi-small bound degree: the number of fiber
    /// components of maximal possible dimension.
    pub fn top_coefficient(&self) -> BigInt {
        if self.degree_bound < 0 {
            return BigInt::from(0);
        }
        self.poly.coeff(self.degree_bound)
    }
}

/// The degree bound `flag_dim(dv) - orbit_dim(λ)/2` for the fiber over `λ` in
/// the component `dv`.
pub fn degree_bound(lambda: &Partition, dimvec: &DimVector) -> i64 {
    dimvec.flag_dim() as i64 - (lambda.orbit_dim() / 2) as i64
}

impl FiberCounter {
    /// Reconstructs the point-count polynomial of the fiber from its values at
    /// primes.
    ///
    /// With `primes = None` the first `degree_bound + 1` primes are used.
    /// Supplied primes must number at least `degree_bound + 1`; extra ones are
    /// checked against the fit. When the bound is negative the fiber must be
    /// empty, which is confirmed at the first prime.
    pub fn fiber_polynomial(
        &self,
        lambda: &Partition,
        dimvec: &DimVector,
        primes: Option<&[u64]>,
    ) -> Result<FiberPolynomial, FlagError> {
        let bound = degree_bound(lambda, dimvec);
        let needed = usize::try_from(bound + 1).unwrap_or(0).max(1);
        let primes: Vec<u64> = match primes {
            Some(ps) => ps.to_vec(),
            None => first_primes(needed),
        };
        if bound < 0 {
            let &p = primes.first().ok_or(FlagError::NoPrimes)?;
            let r = self.fiber_count(lambda, dimvec, p)?;
            if r.count != 0 {
                return Err(FlagError::NonEmptyBeyondBound {
                    lambda: lambda.clone(),
                    dimvec: dimvec.clone(),
                    q: p,
                    count: r.count,
                });
            }
            return Ok(FiberPolynomial {
                lambda: lambda.clone(),
                dimvec: dimvec.clone(),
                degree_bound: bound,
                samples: vec![(p, 0)],
                poly: LaurentPoly::zero(),
            });
        }
        let mut samples = Vec::with_capacity(primes.len());
        for &p in &primes {
            samples.push((p, self.fiber_count(lambda, dimvec, p)?.count));
        }
        let points: Vec<(u64, BigInt)> =
            samples.iter().map(|&(p, c)| (p, BigInt::from(c))).collect();
        let poly = interpolate(&points, bound as usize)?;
        Ok(FiberPolynomial {
            lambda: lambda.clone(),
            dimvec: dimvec.clone(),
            degree_bound: bound,
            samples,
            poly,
        })
    }
}
