//! Leibniz bimodules.
//!
//! A bimodule over `L` is a carrier `M = k^m` with a left action `a.m` and a
//! right action `m.a` given by one matrix per basis element of `L`, subject to
//!
//! - `a(bm) = [ab]m + b(am)`
//! - `a(mb) = (am)b + m[ab]`
//! - `m[ab] = (ma)b + a(mb)`

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Identity, LeibnizAlgebra, ViolationReport};
use crate::exactla::{Matrix, Rational, Subspace};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    algebra: LeibnizAlgebra,
    carrier_dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    /// Checks shapes only; use [`check_bimodule_axioms`] for the axioms.
    pub fn new(algebra: LeibnizAlgebra, carrier_dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        for (side, acts) in [("left", &left), ("right", &right)] {
            if acts.len() != n {
                return Err(Error::InvalidBimodule(format!(
                    "{side} action has {} matrices, expected {n}",
                    acts.len()
                )));
            }
            if let Some(i) = acts.iter().position(|m| m.rows() != carrier_dim || m.cols() != carrier_dim) {
                return Err(Error::InvalidBimodule(format!(
                    "{side} action of basis element {i} is not {carrier_dim}x{carrier_dim}"
                )));
            }
        }
        Ok(Bimodule {
            algebra,
            carrier_dim,
            left,
            right,
        })
    }

    /// `L` acting on itself by `l_x` and `r_x`.
    pub fn regular(alg: &LeibnizAlgebra) -> Self {
        let n = alg.dim();
        Bimodule {
            algebra: alg.clone(),
            carrier_dim: n,
            left: (0..n).map(|i| alg.l_basis(i)).collect(),
            right: (0..n).map(|i| alg.r_basis(i)).collect(),
        }
    }

    /// All actions zero.
    pub fn trivial(alg: &LeibnizAlgebra, carrier_dim: usize) -> Self {
        let zero = Matrix::zeros(carrier_dim, carrier_dim);
        Bimodule {
            algebra: alg.clone(),
            carrier_dim,
            left: alloc::vec![zero.clone(); alg.dim()],
            right: alloc::vec![zero; alg.dim()],
        }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn left_action(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_action(&self) -> &[Matrix] {
        &self.right
    }

    /// The same carrier with the two actions exchanged.
    pub fn swapped(&self) -> Self {
        Bimodule {
            algebra: self.algebra.clone(),
            carrier_dim: self.carrier_dim,
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    fn combine(&self, acts: &[Matrix], x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.carrier_dim, self.carrier_dim);
        for (c, m) in x.iter().zip(acts) {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// Left action of an arbitrary element.
    pub fn left_of(&self, x: &[Rational]) -> Result<Matrix> {
        self.algebra.check_len(x.len())?;
        Ok(self.combine(&self.left, x))
    }

    /// Right action of an arbitrary element.
    pub fn right_of(&self, x: &[Rational]) -> Result<Matrix> {
        self.algebra.check_len(x.len())?;
        Ok(self.combine(&self.right, x))
    }
}

/// Residuals of the three axioms on all basis pairs `(a, b)` and carrier basis
/// vectors `m`; witnesses are `[a, b, m]`.
pub fn check_bimodule_axioms(b: &Bimodule) -> ViolationReport {
    let n = b.algebra.dim();
    let mut report = ViolationReport::default();
    for x in 0..n {
        for y in 0..n {
            let xy = b.algebra.basis_bracket(x, y);
            let (lx, ly, rx, ry) = (&b.left[x], &b.left[y], &b.right[x], &b.right[y]);
            let l_xy = b.combine(&b.left, xy);
            let r_xy = b.combine(&b.right, xy);
            let d1 = &(&(lx * ly) - &l_xy) - &(ly * lx);
            let d2 = &(&(lx * ry) - &(ry * lx)) - &r_xy;
            let d3 = &(&r_xy - &(ry * rx)) - &(lx * ry);
            for m in 0..b.carrier_dim {
                report.record(Identity::BimoduleLeftLeft, &[x, y, m], d1.column(m));
                report.record(Identity::BimoduleLeftRight, &[x, y, m], d2.column(m));
                report.record(Identity::BimoduleRightRight, &[x, y, m], d3.column(m));
            }
        }
    }
    report
}

/// `{ x : left_of(x) = 0 and right_of(x) = 0 }`
pub fn joint_kernel(b: &Bimodule) -> Subspace {
    let n = b.algebra.dim();
    let m = b.carrier_dim;
    // rows indexed by matrix entries of both actions, columns by basis of L
    let assembly = Matrix::from_fn(2 * m * m, n, |row, col| {
        let acts = if row < m * m { &b.left } else { &b.right };
        let e = row % (m * m);
        acts[col].get(e / m, e % m).clone()
    });
    assembly.nullspace()
}

pub fn is_faithful(b: &Bimodule) -> bool {
    joint_kernel(b).is_zero()
}
