//! Dense real linear algebra: matrices, products and the SVD behind the
//! Schmidt decomposition.

mod matrix;
mod svd;

pub use matrix::{matmul, RealMatrix};
pub use svd::{rank_with_tolerance, svd, SvdResult};
