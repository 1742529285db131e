//! Exact rational scalars, vectors and matrices.

mod matrix;
mod rational;
mod vector;

pub use matrix::{affine_rank, solve_linear, LinearSolution, RationalMatrix};
pub use rational::{rat, Rational};
pub use vector::RationalVector;
