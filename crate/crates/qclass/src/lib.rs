//! Exact verification engine for quantized non-Levi conjugacy classes of
//! `SP(2n)`: quantum group modules, the invariant operator `Q`, and the
//! identities it satisfies, checked over exact rational-function fields.

pub mod classical;
pub mod linalg;
pub mod quantization;
pub mod report;
pub mod rmatrix;
pub mod rootdata;
pub mod verma;
pub mod wordalgebra;
pub mod scalars;
pub mod suites;
