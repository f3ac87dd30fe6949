//! Pin(2)-equivariant Manolescu invariants α, β, γ, δ of Brieskorn spheres and
//! their connected sums.
//!
//! Two independent routes are provided: Borel homology of 𝒢-chain complexes
//! over F₂ ([`borel`]), and graded roots of semigroup delta sequences
//! ([`roots`], [`seifert`]). [`sums`] evaluates the closed forms for connected
//! sums and the checks that tie the two routes together.

pub mod error;
pub mod f2linalg;
pub mod gcomplex;

pub use error::{Error, Result};
pub mod borel;
pub mod roots;
pub mod seifert;
pub mod sums;
