//! Exact structure theory of finite-dimensional left Leibniz algebras.
//!
//! Algebras are given by structure constants over the rationals,
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`, and every computation is carried out
//! in exact arithmetic. The crate is `no_std` and only needs `alloc`.
//!
//! Module map:
//!
//! - [`exactla`]: rational matrices, canonical subspaces, flags.
//! - [`algebra`]: the [`LeibnizAlgebra`] value, multiplication operators,
//!   identity checks and derivations.
//! - [`structure`]: ideals, liezation, centers, normalizers, series, quotients.
//! - [`radicals`]: radical, nilradical, Engel and Lie flags.
//! - [`levi`]: Levi decomposition and the reductive criterion.
//! - [`reps`]: bimodules (representations).
//! - [`classify`]: fingerprints and the classification in dimensions 1 and 2.
//! - [`catalog`]: the named algebras used throughout the tests and corpus.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod classify;
mod error;
pub mod exactla;
pub mod levi;
pub mod radicals;
pub mod reps;
pub mod structure;

pub use algebra::{LeibnizAlgebra, MultKind, MultOperator, Violation, ViolationReport};
pub use error::{Error, Result};
pub use exactla::{Flag, Matrix, Rational, Subspace, Vector};
