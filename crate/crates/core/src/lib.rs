//! Exact tensor-product decompositions for highest-weight modules of
//! `gl∞` (central charge ±N) and `W(1+∞)` (non-negative charge), built on
//! Littlewood–Richardson branching for `GL(M+N) ↓ GL(M) × GL(N)`, together
//! with graded-character checks of the `(GL(N), gl∞)` Fock-space dualities.

pub mod characters;
pub mod glhat;
pub mod lr;
pub mod partitions;
pub mod symfunc;
pub mod winfinity;

use thiserror::Error;

pub use characters::{
    branching_function, fock_series, verify_tensor_characters, BranchingFunction, CharError, QSeries,
    TensorCharReport,
};
pub use glhat::{
    classify_primitive, equivalence_map, lambda_minus, lambda_plus, tensor_labels, Category, CategoryLabel,
    GlDecomposition, GlHatError, GlHatWeight, PrimitiveLabel, Sign,
};
pub use lr::{lr_coefficient, restrict, BranchingMultiplicity, EnumerationBox, LrError};
pub use partitions::{weyl_dimension, GeneralizedPartition, Partition, PartitionError};
pub use symfunc::{schur_decompose, schur_polynomial, LaurentSchurExpansion, SymError, SymPolynomial};
pub use winfinity::{
    canonicalize, exponents, is_isomorphic, tensor_w, DeltaSeries, ExponentMultiset, PrimitiveWModule,
    WDecomposition, WError, WFactor,
};

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Lr(#[from] LrError),
    #[error(transparent)]
    GlHat(#[from] GlHatError),
    #[error(transparent)]
    W(#[from] WError),
    #[error(transparent)]
    Char(#[from] CharError),
}

impl Error {
    /// Stable error name for front-ends.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Partition(e) => e.name(),
            Error::Sym(e) => e.name(),
            Error::Lr(e) => e.name(),
            Error::GlHat(e) => e.name(),
            Error::W(e) => e.name(),
            Error::Char(e) => e.name(),
        }
    }
}
