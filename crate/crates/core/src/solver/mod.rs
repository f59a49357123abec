//! Finite-difference Schrödinger eigensolver and spectrum comparison.

pub mod grid;
pub mod spectrum;
pub mod tridiag;

pub use grid::{
    discretize, hamiltonian_residual, laplacian_tridiagonal, rayleigh_quotient, Grid, GridFunction,
    MIN_INTERIOR,
};
pub use spectrum::{
    solve_levels, spectrum_compare, Level, LevelMapping, MatchedPair, MissingGround, SpectrumReport,
};
pub use tridiag::{residual_norm, EigenPair, SymTridiagonal};
