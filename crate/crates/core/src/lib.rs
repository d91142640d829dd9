//! Exact-arithmetic toolkit for D-brane charges and arithmetic genera on
//! anticanonical Calabi-Yau hypersurfaces of smooth projective toric varieties.
//!
//! The pipeline: a full-dimensional lattice polytope ([`polytope`]) determines
//! a complete fan ([`fan`]) and, when the fan is smooth, a Chow ring with
//! exact rational cycle classes ([`intersection`]). On top of that sit the
//! charge and genus formulas ([`charges`]) together with an independent
//! lattice-point-counting oracle ([`oracle`]) used to cross-check them.
//!
//! Everything is computed in arbitrary-precision rational arithmetic; there is
//! no floating point anywhere in the computational path.

pub mod charges;
pub mod fan;
pub mod fixtures;
pub mod intersection;
pub mod lcg;
pub mod linalg;
pub mod oracle;
pub mod polytope;

use thiserror::Error;

/// Errors shared by the geometric and intersection-theoretic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input vertices span a proper affine subspace.
    #[error("vertices affinely span only a rank-{rank} subspace of R^{dim}")]
    NotFullDimensional { dim: usize, rank: usize },

    /// A reflexive polytope was required but some facet offset is not 1.
    #[error("polytope is not reflexive: facet {facet} has offset {offset}")]
    NotReflexive { facet: usize, offset: String },

    /// A halfspace system has a nontrivial recession cone.
    #[error("halfspace system is unbounded along {direction:?}")]
    Unbounded { direction: Vec<i64> },

    /// A maximal cone of the fan is not unimodular.
    #[error("fan is not smooth: max cone {cone:?} has determinant {determinant}")]
    NotSmooth {
        cone: Vec<usize>,
        determinant: String,
    },

    /// The fan does not cover the ambient space.
    #[error("fan is not complete")]
    NotComplete,

    /// A face was passed to a fan built from a different polytope.
    #[error("face does not belong to the polytope that defined this fan")]
    FaceNotOfThisPolytope,

    /// An operation that needs an integral divisor got rational coefficients.
    #[error("divisor has non-integer coefficients")]
    NonIntegerCoefficients,

    /// An operation is defined only in a specific ambient dimension.
    #[error("operation requires dimension {expected}, variety has dimension {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Charges are implemented for ambient dimension up to 4.
    #[error("ambient dimension {0} not supported (maximum is 4)")]
    DimensionUnsupported(usize),

    /// The lattice-point oracle only accepts nef divisors.
    #[error("divisor is not nef")]
    NotNef,

    /// The divisor-times-cycle reduction exceeded its depth budget.
    #[error("internal reduction failed to terminate within its depth budget")]
    InternalNonTermination,
}

pub type Result<T> = std::result::Result<T, Error>;
