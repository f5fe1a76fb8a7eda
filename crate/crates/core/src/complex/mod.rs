//! Bounded complexes over a pluggable coefficient backend.

pub mod backend;
pub mod bounded;
pub mod dual;

pub use backend::{
    AbelianBackend, Backend, HModuleBackend, IsoVerdict, LinearBackend, QuiverBackend,
};
pub use bounded::{BoundedComplex, ChainMap, CohomologyData};
pub use dual::{
    assoc_left, assoc_right, dual_complex, dual_complex_right, strict_identity,
    zigzag_through_dual, zigzag_through_x, DualData, DualSide,
};
