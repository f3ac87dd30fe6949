//! Delta sequences, their tau functions and the graded roots they define.

mod delta;
mod root;

pub use delta::{
    is_sinking, join, reduce, refine, symmetrize, tau, DeltaSequence, PositionedDelta, TauFunction,
};
pub use root::{
    build_root, delta_tilde, u_module, DeltaTilde, FiniteTower, GradedRoot, GradingConvention,
    UModule, Vertex,
};
