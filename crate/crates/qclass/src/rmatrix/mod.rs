//! The vector representation, the explicit R-matrix with its flip `S = PR`
//! and projector `κ`, the quasi-R-matrix, and the invariant operator
//! `Q = (π⊗id)(R_{21} R)` on truncated tensor products.

mod explicit;
mod quasi;
mod tensor;
mod vector;

pub use explicit::*;
pub use quasi::*;
pub use tensor::*;
pub use vector::VectorRep;

use crate::verma::VermaError;
use crate::wordalgebra::WordError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RMatrixError {
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("quasi-R system singular at {0:?}")]
    Singular(Vec<i64>),
    #[error("quasi-R system inconsistent at {0:?}")]
    Inconsistent(Vec<i64>),
    #[error("operator leaves the tensor slice")]
    Escaped,
}
