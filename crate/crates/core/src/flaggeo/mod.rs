//! Linear algebra over prime fields and point counts of Spaltenstein fibers:
//! flags `0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_n = F_p^d` of a fixed type with
//! `a(V_i) ⊆ V_{i-1}` for a fixed nilpotent `a`.

mod cache;
mod count;
mod field;
mod jordan;
mod matrix;
mod poly;
mod subspace;

use thiserror::Error;

use crate::combinatorics::{DimVector, Partition};
use crate::qpoly::PolyError;

pub use cache::CountCache;
pub use count::{
    count_flags_brute, fiber_count_brute, CounterStats, FiberCountRecord, FiberCounter, Strategy,
    DEFAULT_BUDGET,
};
pub use field::{first_primes, is_prime, next_prime_after, PrimeField};
pub use jordan::{block_starts, jordan_matrix, jordan_type, quotient_map, quotient_type};
pub use matrix::FqMatrix;
pub use poly::{degree_bound, FiberPolynomial};
pub use subspace::{enumerate_subspaces, FqSubspace, SubspaceIter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("subspace is not contained in the kernel")]
    NotInKernel,
    #[error("subspace is not invariant under the map")]
    NotInvariant,
    #[error("Jordan type has size {lambda} but dimension vector sums to {dimvec}")]
    SizeMismatch { lambda: usize, dimvec: usize },
    #[error("dimension vector must have at least one entry")]
    EmptyDimVector,
    #[error("enumeration budget of {budget} subspaces exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("count does not fit in 64 bits")]
    Overflow,
    #[error("no primes supplied")]
    NoPrimes,
    #[error("fiber over {lambda} in component {dimvec} has {count} points at q={q} but its degree bound is negative")]
    NonEmptyBeyondBound {
        lambda: Partition,
        dimvec: DimVector,
        q: u64,
        count: u64,
    },
    #[error("interpolation failed: {0}")]
    Interpolation(#[from] PolyError),
    #[error("count cache: {0}")]
    Cache(String),
}

impl FlagError {
    /// Errors caused by limits or I/O rather than by the mathematics.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            FlagError::BudgetExceeded { .. } | FlagError::Overflow | FlagError::Cache(_)
        )
    }
}
