//! Exact linear algebra over `Q` and `F_p`.

pub mod arith;
pub mod field;
pub mod group_algebra;
pub mod matrix;
pub mod sparse;

pub use field::{Field, Scalar};
pub use group_algebra::{group_algebra_right_inverse, GroupAlgebraMatrix};
pub use matrix::{rank_kernel, solve_right, Matrix, RankKernel};
pub use sparse::{RankInfo, RowSource, SparseMatrix};
