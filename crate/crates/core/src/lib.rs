//! Exact linear bialgebra.
//!
//! A *bimatrix* `A = A₁ ∪ A₂` is an ordered pair of matrices acted on
//! componentwise. This crate provides exact (rational, prime-field and
//! neutrosophic) linear algebra over such pairs, inner biproducts and
//! Gram-Schmidt biorthogonalization, bicodes with a pseudo-projection
//! decoder, and Markov / Leontief bimodels.

#![allow(clippy::type_complexity, clippy::wrong_self_convention)]

pub mod bicode;
pub mod bimatrix;
pub mod bispace;
pub mod error;
pub mod io;
pub mod matrix;
pub mod models;
pub mod neutro;
pub mod scalar;

pub use bimatrix::{Bimatrix, Bipolynomial, Bivector};
pub use error::{Error, Result};
pub use matrix::Matrix;
