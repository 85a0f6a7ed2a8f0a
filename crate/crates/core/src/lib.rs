pub mod combinatorics;
pub mod flaggeo;
pub mod qpoly;
pub mod verifier;
