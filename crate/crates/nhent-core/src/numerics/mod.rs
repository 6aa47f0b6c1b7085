//! Dense complex linear algebra: general eigendecomposition, branch-aware
//! logarithms, complex least squares and LU.

mod eig;
mod fit;
mod log;
mod lu;
mod matrix;

pub use eig::{eig, eig_general, eig_order, eigenvalues, EigOptions, EigenDecomposition};
pub use fit::{complex_linear_fit, LinearFit};
pub use log::{branch_log, LogBranch};
pub use lu::{det, inverse, Lu};
pub use matrix::{dot, inner, vec_norm, ComplexMatrix};
