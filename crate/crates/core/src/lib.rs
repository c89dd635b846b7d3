//! Monogenity of monic integer polynomials and power integral bases in
//! quartic fields.
//!
//! The index `ind(f) = (Z_K : Z[alpha])` of a root `alpha` of `f` is
//! computed prime by prime: primes with `p^2 ∤ disc(f)` are skipped,
//! Dedekind's criterion decides whether `p | ind(f)`, and Ore's
//! Newton-polygon theorem gives the exact valuation whenever `f` is
//! p-regular. The [`quartic`] module reduces the quartic index form
//! equation to a cubic form equation and quartic Thue equations and
//! searches for small solutions.

pub mod arith;
pub mod dedekind;
pub mod monogenity;
pub mod newton;
pub mod poly;
pub mod quartic;

pub use arith::{Effort, Factorization, SquarefreeStatus};
pub use poly::{parse_poly, IntPoly, ModPoly};
