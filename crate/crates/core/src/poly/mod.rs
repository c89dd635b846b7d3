//! Exact univariate polynomials over Z, over F_p and over residue fields
//! F_p[x]/(phi).

pub mod ffpoly;
pub mod field;
mod int_poly;
mod mod_poly;
mod parse;

use thiserror::Error;

pub use field::{FiniteField, PrimeField, ResidueField, ResidueFieldElem};
pub use int_poly::{bareiss_determinant, discriminant, resultant, IntPoly};
pub use mod_poly::{factor_mod_p, factor_residual, ModPoly, ResiduePoly, DEFAULT_SPLIT_SEED};
pub use parse::parse_poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("non-integer coefficient at position {position}")]
    NonIntegerCoefficient { position: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree {got} is below the required {needed}")]
    DegreeTooSmall { needed: usize, got: usize },
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is reducible modulo p")]
    Reducible(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
}
