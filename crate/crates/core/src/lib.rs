//! Exceptional X₁/Xⱼ Laguerre and Jacobi polynomials, the rationally extended
//! potentials built from them, and their supersymmetric partners.

pub mod cli;
pub mod error;
pub mod polycore;
pub mod potentials;
pub mod quad;
pub mod solver;
pub mod susy;
pub mod verify;
pub mod xop;

pub use error::{Error, Result};
