//! Partitions, dimension vectors, tableaux and the numbers built from them.
//!
//! A [`Partition`] labels a nilpotent orbit by its Jordan type and,
//! simultaneously, an irreducible representation by its shape. A
//! [`DimVector`] labels a component of the partial flag variety and a torus
//! weight. Kostka numbers connect the two: `kostka_number(shape, dv)` is the
//! multiplicity of weight `dv` in the Schur functor of `shape`, and
//! `kostka_number(shape, μ)` for a partition `μ` is the multiplicity of the
//! Specht module of `shape` in the permutation module induced from the Young
//! subgroup of `μ`.

mod dims;
mod dimvec;
mod partition;
mod tableau;

use thiserror::Error;

pub use dims::{checked_pow, multinomial, schur_dim, syt_count};
pub use dimvec::{enumerate_dimvecs, DimVector};
pub use partition::{
    all_partitions, dense_type, enumerate_partitions, nilcone_dim, partitions_bounded, Partition,
};
pub use tableau::{enumerate_ssyt, kostka_number, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse {0:?} as comma-separated non-negative integers")]
    Parse(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("n and d must be positive (got n={n}, d={d})")]
    InvalidParameters { n: usize, d: usize },
    #[error("integer overflow")]
    Overflow,
}
