//! The group algebra 𝒢 and finite 𝒢-chain complexes of type SWF.

mod algebra;
mod complex;
mod validate;

pub use algebra::{galg_boundary, galg_mul, GAlgebraElement, Monomial};
pub use complex::{
    make_fixed_complex, make_t, quaternion_sphere, suspend_h, suspend_rtilde, tensor, tensor_all,
    ComplexBuilder, FreeGenerator, RawComplex, SwfComplex, Triple,
};
pub use validate::{validate, Check, Diagnostics};
