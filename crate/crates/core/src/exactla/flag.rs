use alloc::format;
use alloc::vec::Vec;

use super::matrix::Matrix;
use super::subspace::Subspace;
use super::vector::Vector;
use crate::{Error, Result};

/// Complete flag `0 = V_0 < V_1 < ... < V_n = k^n` with `dim V_k = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    ambient: usize,
    chain: Vec<Subspace>,
}

impl Flag {
    pub fn new(chain: Vec<Subspace>) -> Result<Self> {
        let Some(first) = chain.first() else {
            return Err(Error::InvalidFlag("empty chain".into()));
        };
        let ambient = first.ambient_dim();
        if chain.len() != ambient + 1 {
            return Err(Error::InvalidFlag(format!(
                "expected {} terms, found {}",
                ambient + 1,
                chain.len()
            )));
        }
        for (k, v) in chain.iter().enumerate() {
            if v.ambient_dim() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: v.ambient_dim(),
                });
            }
            if v.dim() != k {
                return Err(Error::InvalidFlag(format!("term {k} has dimension {}", v.dim())));
            }
            if k > 0 && !chain[k - 1].within(v) {
                return Err(Error::InvalidFlag(format!("term {} is not inside term {k}", k - 1)));
            }
        }
        Ok(Flag { ambient, chain })
    }

    /// Flag whose `k`-th term is spanned by the first `k` vectors.
    pub fn from_basis(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let chain = (0..=vectors.len())
            .map(|k| Subspace::span(ambient, &vectors[..k]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(chain)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn chain(&self) -> &[Subspace] {
        &self.chain
    }

    /// Columns `b_1..b_n` with `V_k = span(b_1..b_k)`; `b_k` is the first
    /// canonical basis vector of `V_k` outside `V_{k-1}`.
    pub fn adapted_basis(&self) -> Matrix {
        let cols: Vec<Vector> = (1..=self.ambient)
            .map(|k| {
                self.chain[k]
                    .basis_vectors()
                    .into_iter()
                    .find(|v| !self.chain[k - 1].holds(v))
                    .expect("flag terms strictly increase")
            })
            .collect();
        Matrix::from_columns(self.ambient, &cols).expect("flag basis shape")
    }

    /// `op` expressed in the adapted basis.
    pub fn in_adapted_basis(&self, op: &Matrix) -> Matrix {
        let b = self.adapted_basis();
        let inv = b.inverse().expect("adapted basis is invertible");
        &(&inv * op) * &b
    }

    /// `op(V_k) ⊂ V_k` for every `k`: upper triangular in the adapted basis.
    pub fn is_invariant(&self, op: &Matrix) -> bool {
        self.chain.iter().all(|v| v.image(op).within(v))
    }

    /// `op(V_k) ⊂ V_{k-1}` for every `k`: strictly upper triangular in the
    /// adapted basis.
    pub fn is_strictly_triangularizing(&self, op: &Matrix) -> bool {
        (1..self.chain.len()).all(|k| self.chain[k].image(op).within(&self.chain[k - 1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::vector::{from_ints, unit};

    #[test]
    fn coordinate_flag() {
        let f = Flag::from_basis(2, &[unit(2, 0), unit(2, 1)]).unwrap();
        let n = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(f.is_strictly_triangularizing(&n));
        assert!(!f.is_strictly_triangularizing(&n.transpose()));
        assert!(f.is_invariant(&Matrix::from_int_rows(&[&[1, 1], &[0, 2]])));
        assert_eq!(f.adapted_basis(), Matrix::identity(2));
    }

    #[test]
    fn rejects_non_flags() {
        let dup = [from_ints(&[1, 0]), from_ints(&[2, 0])];
        assert!(Flag::from_basis(2, &dup).is_err());
        let short = alloc::vec![Subspace::zero(2), Subspace::full(2)];
        assert!(Flag::new(short).is_err());
    }

    #[test]
    fn adapted_basis_triangularizes() {
        let f = Flag::from_basis(2, &[from_ints(&[1, 1]), from_ints(&[0, 1])]).unwrap();
        // maps (1,1) -> 0 and (0,1) -> (1,1)
        let op = Matrix::from_int_rows(&[&[-1, 1], &[-1, 1]]);
        assert!(f.is_strictly_triangularizing(&op));
        assert!(f.in_adapted_basis(&op).is_strictly_upper_triangular());
    }
}
