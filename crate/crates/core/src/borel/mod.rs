//! Truncated Borel complexes C(EG) ⊗_𝒢 Z and C(EG) ⊗_{C(S¹)} Z, the
//! invariants a, b, c, d, and Manolescu invariants of triples.
//!
//! a, b, c, d are read off by asking which of the classes eᵢ ⊗ f are
//! boundaries. Two routes answer that question: dense elimination on the
//! materialized complex ([`explicit`]) and a perturbation-reduced complex
//! built on the homology of Z ([`reduced`]).

pub mod eg;
pub mod explicit;
mod invariants;
pub mod reduced;

pub use eg::{BorelCell, Chain, EgTruncation, Flavor};
pub use explicit::{g_borel_complex, s1_borel_complex, BorelChainComplex};
pub use invariants::{
    abc, abc_with, abcd, abcd_explicit, d_invariant_chain, d_with, from_abcd, manolescu,
    AbcdValues, BorelEngine, BoundaryOracle,
};
