//! Exact scalars over ℚ(i) and the linear algebra built on them.

mod matrix;
mod scalar;
mod subspace;
mod vector;

pub use matrix::{echelon_vectors, solve_linear, ExactMatrix, LinearSolution, Signature};
pub use scalar::{gq_arith, parse_rational, rat, rat_int, GaussRational, GqOp, Rational, GQ};
pub use subspace::{CoordinateSystem, Subspace};
pub use vector::{linear_combination, Vector};
