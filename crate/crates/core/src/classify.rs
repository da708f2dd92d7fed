//! Invariant fingerprints and the classification in dimensions 1 and 2.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::catalog;
use crate::exactla::vector::{self, Vector};
use crate::exactla::{Matrix, Rational};
use crate::radicals;
use crate::structure;
use crate::{Error, Result};

/// Basis-independent invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub is_lie: bool,
    pub is_left_leibniz: bool,
    pub is_right_leibniz: bool,
    pub ker_dim: usize,
    pub left_center_dim: usize,
    pub right_center_dim: usize,
    pub derived_dims: Vec<usize>,
    pub central_dims: Vec<usize>,
    pub radical_dim: usize,
    pub nilradical_dim: usize,
    pub min_generators: usize,
}

/// Name of the matching canonical algebra and an isomorphism: the columns of
/// `isomorphism` are the images of the canonical basis, so that
/// `alg.change_basis(isomorphism)` has the canonical structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub name: &'static str,
    pub isomorphism: Matrix,
}

/// Every Leibniz algebra of dimension 1 or 2 up to isomorphism.
pub fn canonical_algebras(dim: usize) -> Result<Vec<(&'static str, LeibnizAlgebra)>> {
    match dim {
        1 => Ok(vec![("a_1", catalog::abelian1())]),
        2 => Ok(vec![
            ("a_2", catalog::a2()),
            ("r_2", catalog::r2()),
            ("(i)", catalog::l2i()),
            ("(ii)", catalog::l2ii()),
        ]),
        d => Err(Error::DimensionOutOfRange(d)),
    }
}

pub fn fingerprint(alg: &LeibnizAlgebra) -> Result<Fingerprint> {
    Ok(Fingerprint {
        dim: alg.dim(),
        is_lie: alg.is_lie(),
        is_left_leibniz: alg.is_left_leibniz(),
        is_right_leibniz: alg.is_right_leibniz(),
        ker_dim: structure::ker_ideal(alg).dim(),
        left_center_dim: structure::left_center(alg).dim(),
        right_center_dim: structure::right_center(alg).dim(),
        derived_dims: structure::derived_series(alg).dims(),
        central_dims: structure::lower_central_series(alg).dims(),
        radical_dim: radicals::radical(alg)?.dim(),
        nilradical_dim: radicals::nilradical(alg)?.dim(),
        min_generators: structure::min_generators(alg),
    })
}

fn unit(n: usize, i: usize) -> Vector {
    vector::unit(n, i)
}

fn trial_vectors(n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..n).map(|i| unit(n, i)).collect();
    out.push(vec![Rational::from_integer(1.into()); n]);
    out
}

/// `mu` with `[x, k] = mu k`, for `k` spanning an invariant line.
fn eigen_ratio(alg: &LeibnizAlgebra, x: &[Rational], k: &[Rational]) -> Rational {
    let image = alg.br(x, k);
    let p = k.iter().position(|c| !num_traits::Zero::is_zero(c)).expect("nonzero line");
    &image[p] / &k[p]
}

fn witness(alg: &LeibnizAlgebra, name: &str) -> Option<Matrix> {
    let n = alg.dim();
    let nonzero = |v: &Vector| !vector::is_zero(v);
    let cols: Vec<Vector> = match name {
        "a_1" | "a_2" => (0..n).map(|i| unit(n, i)).collect(),
        "r_2" => {
            let b = structure::commutant(alg).lex_first_basis_vector()?;
            let x = trial_vectors(n).into_iter().find(|x| nonzero(&alg.br(x, &b)))?;
            let mu = eigen_ratio(alg, &x, &b);
            vec![vector::scale(&mu.recip(), &x), b]
        }
        "(i)" => {
            let b = trial_vectors(n).into_iter().find(|x| nonzero(&alg.br(x, x)))?;
            vec![alg.br(&b, &b), b]
        }
        "(ii)" => {
            let k = structure::ker_ideal(alg).lex_first_basis_vector()?;
            let x = trial_vectors(n).into_iter().find(|x| nonzero(&alg.br(x, &k)))?;
            let mu = eigen_ratio(alg, &x, &k);
            let mut b = vector::scale(&mu.recip(), &x);
            if !nonzero(&alg.br(&b, &b)) {
                b = vector::add(&b, &k);
            }
            vec![alg.br(&b, &b), b]
        }
        _ => return None,
    };
    Matrix::from_columns(n, &cols).ok()
}

fn same_constants(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> bool {
    let n = a.dim();
    n == b.dim() && (0..n).all(|i| (0..n).all(|j| a.basis_bracket(i, j) == b.basis_bracket(i, j)))
}

/// Matches the fingerprint against the canonical list and confirms the match
/// with an explicit, exactly verified isomorphism.
pub fn classify_dim_le2(alg: &LeibnizAlgebra) -> Result<Classification> {
    let candidates = canonical_algebras(alg.dim())?;
    if !alg.is_left_leibniz() {
        return Err(Error::InvalidAlgebra("left Leibniz identity fails".into()));
    }
    let fp = fingerprint(alg)?;
    for (name, canonical) in &candidates {
        if fingerprint(canonical)? != fp {
            continue;
        }
        let p = witness(alg, name).ok_or_else(|| Error::NoMatch(format!("no isomorphism onto {name}")))?;
        let image = alg.change_basis(&p)?;
        if !same_constants(&image, canonical) {
            return Err(Error::NoMatch(format!("candidate isomorphism onto {name} fails")));
        }
        return Ok(Classification { name, isomorphism: p });
    }
    Err(Error::NoMatch(format!("{fp:?}")))
}

/// Whether `p` is an isomorphism from `canonical` onto `alg` in the sense of
/// [`Classification::isomorphism`].
pub fn is_isomorphism(alg: &LeibnizAlgebra, canonical: &LeibnizAlgebra, p: &Matrix) -> bool {
    alg.change_basis(p).is_ok_and(|image| same_constants(&image, canonical))
}
