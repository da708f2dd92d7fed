use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::vector::{self, Vector};
use super::Rational;
use crate::{Error, Result};

/// Linear subspace of `k^n`, stored by its canonical reduced row-echelon
/// basis (one basis vector per row, no zero rows).
///
/// Equality is equality of canonical bases, which is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Canonical complement of a subspace `W` and the projection onto it.
///
/// The complement is spanned by the coordinate vectors `e_j` for the
/// non-pivot columns `j` of `W`'s canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    /// `(n - dim W) x n`; sends `v` to the complement coordinates of `v mod W`.
    pub projection: Matrix,
    /// `n x (n - dim W)`; columns are the complement basis vectors.
    pub section: Matrix,
}

/// `{ v : m v = 0 }`
pub fn nullspace(m: &Matrix) -> Subspace {
    let n = m.cols();
    let e = m.echelon();
    let mut is_pivot = alloc::vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut gens = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vector::unit(n, free);
        for (r, &p) in e.pivots.iter().enumerate() {
            v[p] = -e.reduced.get(r, free);
        }
        gens.push(v);
    }
    Subspace::from_generators(n, &gens)
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let e = m.echelon();
        let rows: Vec<usize> = (0..e.rank).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            ambient: m.cols(),
            basis: e.reduced.select(&rows, &cols),
            pivots: e.pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::from_matrix_rows(&m.transpose())
    }

    pub(crate) fn from_generators(ambient: usize, vectors: &[Vector]) -> Self {
        Self::span(ambient, vectors).expect("generator length mismatch")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Lexicographically smallest canonical basis vector (the row with the
    /// largest pivot).
    pub fn lex_first_basis_vector(&self) -> Option<Vector> {
        self.dim().checked_sub(1).map(|r| self.basis.row(r).to_vec())
    }

    /// `v` minus its component along the canonical basis; zero at every pivot.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut out, &-c, self.basis.row(r));
            }
        }
        out
    }

    pub(crate) fn holds(&self, v: &[Rational]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.holds(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if v.len() != self.ambient || !self.holds(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combination(&self, coords: &[Rational]) -> Vector {
        let mut out = vector::zero(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            vector::axpy(&mut out, c, self.basis.row(r));
        }
        out
    }

    /// Rows spanning `{ y : y . w = 0 for all w in self }`. The subspace is
    /// the nullspace of this matrix.
    pub fn annihilator(&self) -> Matrix {
        nullspace(&self.basis).basis.clone()
    }

    pub(crate) fn join(&self, other: &Subspace) -> Subspace {
        let m = Matrix::vstack(self.ambient, &[self.basis.clone(), other.basis.clone()])
            .expect("ambient mismatch");
        Self::from_matrix_rows(&m)
    }

    pub(crate) fn meet(&self, other: &Subspace) -> Subspace {
        let eqs = Matrix::vstack(self.ambient, &[self.annihilator(), other.annihilator()])
            .expect("ambient mismatch");
        nullspace(&eqs)
    }

    pub(crate) fn within(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.holds(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.join(other))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.meet(other))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.within(other))
    }

    /// Image of the subspace under `m` (an `p x n` matrix).
    pub fn image(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vector> = (0..self.dim()).map(|r| m.apply(self.basis.row(r))).collect();
        Self::from_generators(m.rows(), &rows)
    }

    pub fn quotient_data(&self) -> QuotientData {
        let n = self.ambient;
        let mut is_pivot = alloc::vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let section = Matrix::from_fn(n, free.len(), |i, j| {
            if free[j] == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let mut projection = Matrix::zeros(free.len(), n);
        for i in 0..n {
            let r = self.reduce(&vector::unit(n, i));
            for (j, &c) in free.iter().enumerate() {
                projection.set(j, i, r[c].clone());
            }
        }
        QuotientData { projection, section }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}
