//! Exact arithmetic: big integers and rationals, dense matrices, dense
//! univariate polynomials, Sturm root counting. No floating point anywhere.

mod matrix;
mod poly;

pub use matrix::IntMatrix;
pub use poly::{Int, IntPoly, Rat, RatPoly};
