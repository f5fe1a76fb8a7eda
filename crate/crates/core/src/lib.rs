//! Exact kernel for finite-dimensional monoidal algebra.
//!
//! Everything here computes over exact scalar domains: the rationals,
//! prime fields, and cyclotomic extensions of the rationals. No floating
//! point is used anywhere, so every verdict produced by the verification
//! routines is a certificate, not an approximation.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`] and [`matrix`] provide exact field arithmetic and dense
//!   linear algebra (reduced row echelon form, kernels, solving,
//!   Kronecker products).
//! * [`intmat`] and [`abelian`] provide integer matrices, Smith normal
//!   form, and finitely generated abelian groups presented by relation
//!   matrices.
//! * [`hopf`] builds finite-dimensional Hopf algebras from structure
//!   constants, checks the axioms mechanically, twists comultiplications
//!   by Drinfeld twists, and works with finite-dimensional right modules
//!   and their duals.
//! * [`quiver`] implements pointwise tensor products of quiver
//!   representations and the endofunctor playground on representations
//!   of the two-vertex quiver.
//! * [`complex`] implements bounded complexes over a pluggable backend
//!   (modules over a Hopf algebra, quiver representations, finitely
//!   generated abelian groups) with total tensor product, truncation,
//!   shift, duality, and cohomology.
//! * [`verify`] bundles the high-level checks: Künneth comparisons,
//!   aisle membership and monoidal t-structure conditions, deviation
//!   probes, tensor reducedness, and dual zig-zag identities.
//! * [`sample`] generates seeded pseudo-random instances for all of the
//!   above so the checks can be exercised in bulk, reproducibly.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod abelian;
pub mod complex;
pub mod error;
pub mod hopf;
pub mod intmat;
pub mod matrix;
pub mod quiver;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
