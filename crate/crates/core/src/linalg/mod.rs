//! Exact dense linear algebra over the Gaussian rationals.

mod matrix;
mod scalar;
mod sparse;
mod subspace;

pub use matrix::{
    algebra_radical, algebra_radical_coefficients, independent_columns, kernel_basis, rref, solve,
    trace_of_product, Matrix,
};
pub use scalar::Scalar;
pub use sparse::{sparse_from_dense, sparse_kernel, sparse_to_dense, Echelon, SparseRow};
pub use subspace::Subspace;
