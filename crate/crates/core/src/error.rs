//! Crate-wide error type.

use alloc::string::String;

/// Clause of the twist validation that failed.
///
/// Validation proceeds in this order; the first violated clause is
/// reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistClause {
    /// The candidate element is not invertible in the tensor square.
    Invertibility,
    /// `(counit ⊗ id)(J)` or `(id ⊗ counit)(J)` is not the unit.
    CounitNormalization,
    /// The 2-cocycle identity fails in the tensor cube.
    Cocycle,
}

impl core::fmt::Display for TwistClause {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            TwistClause::Invertibility => "invertibility",
            TwistClause::CounitNormalization => "counit normalization",
            TwistClause::Cocycle => "2-cocycle identity",
        };
        f.write_str(s)
    }
}

/// Errors produced by construction and verification routines.
///
/// Scalar-level arithmetic on mismatched fields is a programming error
/// and panics; everything that can be triggered by user-supplied data
/// (file input, CLI parameters, structure constants) reports through
/// this type instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands live over different scalar fields.
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    /// Matrix or vector dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A square matrix expected to be invertible is singular.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// A multiplication table does not describe a group.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// A built-in algebra is not defined over the requested field.
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    /// The requested primitive root of unity does not exist.
    #[error("no primitive {n}-th root of unity in {field}")]
    NoPrimitiveRoot { n: u64, field: String },

    /// Structure constants violate an algebra, coalgebra, or Hopf axiom.
    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    /// Operands are defined over different algebras or quivers.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// A candidate Drinfeld twist fails validation.
    #[error("invalid twist: {clause} violated{detail}")]
    InvalidTwist { clause: TwistClause, detail: String },

    /// A map between presented groups does not respect the relations.
    #[error("not well defined: {0}")]
    NotWellDefined(String),

    /// A linear map is not a morphism in the relevant category.
    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    /// Morphisms cannot be composed or compared at these degrees.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// A differential does not square to zero.
    #[error("not a complex: d\u{b2} \u{2260} 0 at degree {degree}")]
    DifferentialSquare { degree: i64 },

    /// A chain map condition fails.
    #[error("not a chain map: square at degree {degree} does not commute")]
    NotAChainMap { degree: i64 },

    /// The operation needs a rigid backend (duals) and this one is not.
    #[error("backend is not rigid: {0}")]
    NonRigidBackend(String),

    /// A lift or descent that must exist does not.
    #[error("factorization failed: {0}")]
    Factorization(String),

    /// Invalid user-facing parameter (builder arguments, CLI inputs).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn context(msg: impl Into<String>) -> Self {
        Error::ContextMismatch(msg.into())
    }
}
