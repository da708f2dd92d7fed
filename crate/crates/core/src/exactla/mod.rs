//! Exact rational linear algebra.
//!
//! Every structural computation in this crate reduces to row reduction over
//! the rationals. Subspaces are stored by their canonical reduced row-echelon
//! basis, so two subspaces are equal exactly when their bases are identical.

mod flag;
mod matrix;
mod poly;
mod rational;
mod subspace;
pub mod vector;

pub use flag::Flag;
pub use matrix::{rref, solve, Echelon, Matrix};
pub use poly::{characteristic_polynomial, rational_roots};
pub use rational::{parse_rational, Rational};
pub use subspace::{nullspace, QuotientData, Subspace};
pub use vector::Vector;
