//! Ideals, liezation, centers, normalizers, derived and central series,
//! generation, quotients.

use alloc::vec::Vec;

use crate::algebra::{default_names, LeibnizAlgebra};
use crate::exactla::vector::{self, Vector};
use crate::exactla::{Matrix, Rational, Subspace};
use crate::{Error, Result};

/// Terms of a derived or lower central series, up to (not including) the
/// first repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    pub terminal_dim: usize,
}

impl SeriesResult {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn terminal(&self) -> &Subspace {
        self.terms.last().expect("series has at least one term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.terminal_dim == 0
    }
}

/// `L / I` on the canonical complement of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub algebra: LeibnizAlgebra,
    /// `dim(L/I) x dim(L)`
    pub projection: Matrix,
    /// `dim(L) x dim(L/I)`; `projection * section = id`.
    pub section: Matrix,
    pub kernel: Subspace,
}

impl QuotientAlgebra {
    pub fn project(&self, v: &[Rational]) -> Vector {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &[Rational]) -> Vector {
        self.section.apply(v)
    }

    /// Full preimage in `L` of a subspace of the quotient.
    pub fn preimage(&self, sub: &Subspace) -> Subspace {
        self.kernel.join(&sub.image(&self.section))
    }

    /// Checks `pi[e_i, e_j] = [pi e_i, pi e_j]` on all basis pairs of `parent`.
    pub fn is_homomorphism(&self, parent: &LeibnizAlgebra) -> bool {
        let n = parent.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.project(parent.basis_bracket(i, j));
                let rhs = self.algebra.br(&self.project(&parent.unit(i)), &self.project(&parent.unit(j)));
                lhs == rhs
            })
        })
    }
}

pub(crate) fn check(alg: &LeibnizAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != alg.dim() {
        return Err(Error::AmbientMismatch {
            left: alg.dim(),
            right: s.ambient_dim(),
        });
    }
    Ok(())
}

/// Span of `[u, v]` over basis vectors `u` of `a` and `v` of `b`.
pub fn product_subspace(alg: &LeibnizAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check(alg, a)?;
    check(alg, b)?;
    Ok(product(alg, a, b))
}

pub(crate) fn product(alg: &LeibnizAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let bv = b.basis_vectors();
    let gens: Vec<Vector> = a
        .basis_vectors()
        .iter()
        .flat_map(|u| bv.iter().map(move |v| alg.br(u, v)))
        .collect();
    Subspace::from_generators(alg.dim(), &gens)
}

/// `[L, L]`
pub fn commutant(alg: &LeibnizAlgebra) -> Subspace {
    let full = Subspace::full(alg.dim());
    product(alg, &full, &full)
}

/// `[L, S] ⊂ S`
pub fn is_left_ideal(alg: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    check(alg, s)?;
    Ok(product(alg, &Subspace::full(alg.dim()), s).within(s))
}

/// `[S, L] ⊂ S`
pub fn is_right_ideal(alg: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    check(alg, s)?;
    Ok(product(alg, s, &Subspace::full(alg.dim())).within(s))
}

pub fn is_ideal(alg: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    Ok(is_left_ideal(alg, s)? && is_right_ideal(alg, s)?)
}

pub fn is_subalgebra(alg: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    check(alg, s)?;
    Ok(product(alg, s, s).within(s))
}

/// The algebra induced on a subalgebra, in the coordinates of its canonical
/// basis.
pub fn restrict(alg: &LeibnizAlgebra, s: &Subspace) -> Result<LeibnizAlgebra> {
    if !is_subalgebra(alg, s)? {
        return Err(Error::NotASubalgebra);
    }
    let basis = s.basis_vectors();
    let mut entries = Vec::new();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let coords = s.coordinates(&alg.br(u, v)).expect("closed under bracket");
            for (k, c) in coords.into_iter().enumerate() {
                entries.push((i, j, k, c));
            }
        }
    }
    LeibnizAlgebra::from_entries(default_names(s.dim()), &entries)
}

fn series(alg: &LeibnizAlgebra, mut next: impl FnMut(&Subspace) -> Subspace) -> SeriesResult {
    let first = commutant(alg);
    let mut terms = alloc::vec![first];
    let mut stabilized = false;
    // dimensions strictly decrease until the series repeats
    for _ in 0..=alg.dim() {
        let t = next(terms.last().expect("nonempty"));
        if &t == terms.last().expect("nonempty") {
            stabilized = true;
            break;
        }
        terms.push(t);
    }
    let terminal_dim = terms.last().map_or(0, Subspace::dim);
    SeriesResult {
        terms,
        stabilized,
        terminal_dim,
    }
}

/// `D^1 = [L, L]`, `D^{k+1} = [D^k, D^k]`.
pub fn derived_series(alg: &LeibnizAlgebra) -> SeriesResult {
    series(alg, |t| product(alg, t, t))
}

/// `C^1 = [L, L]`, `C^{k+1} = [L, C^k]`.
pub fn lower_central_series(alg: &LeibnizAlgebra) -> SeriesResult {
    let full = Subspace::full(alg.dim());
    series(alg, |t| product(alg, &full, t))
}

pub fn is_solvable(alg: &LeibnizAlgebra) -> bool {
    derived_series(alg).reaches_zero()
}

pub fn is_nilpotent(alg: &LeibnizAlgebra) -> bool {
    lower_central_series(alg).reaches_zero()
}

/// Smallest `m` with `C^m(L) = 0`, or `None` if the algebra is not nilpotent.
pub fn nilpotency_class(alg: &LeibnizAlgebra) -> Option<usize> {
    let s = lower_central_series(alg);
    s.terms.iter().position(Subspace::is_zero).map(|p| p + 1)
}

/// Nilpotency of a subalgebra, as an algebra in its own right.
pub fn is_nilpotent_subalgebra(alg: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    Ok(is_nilpotent(&restrict(alg, s)?))
}

pub fn is_solvable_subalgebra(alg: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    Ok(is_solvable(&restrict(alg, s)?))
}

/// The liezator `Ker(L)`: span of `[e_i, e_j] + [e_j, e_i]` over basis pairs.
pub fn ker_ideal(alg: &LeibnizAlgebra) -> Subspace {
    let n = alg.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            gens.push(vector::add(alg.basis_bracket(i, j), alg.basis_bracket(j, i)));
        }
    }
    Subspace::from_generators(n, &gens)
}

/// `L / I` for a two-sided ideal `I`.
pub fn quotient(alg: &LeibnizAlgebra, ideal: &Subspace) -> Result<QuotientAlgebra> {
    if !is_ideal(alg, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let data = ideal.quotient_data();
    let m = data.section.cols();
    let lifts = data.section.column_vectors();
    let mut entries = Vec::new();
    for p in 0..m {
        for q in 0..m {
            let image = data.projection.apply(&alg.br(&lifts[p], &lifts[q]));
            for (k, c) in image.into_iter().enumerate() {
                entries.push((p, q, k, c));
            }
        }
    }
    // complement basis vectors are coordinate vectors, so they keep their labels
    let names = lifts
        .iter()
        .map(|v| {
            let i = v.iter().position(|x| !num_traits::Zero::is_zero(x)).expect("unit vector");
            alg.basis_names()[i].clone()
        })
        .collect();
    Ok(QuotientAlgebra {
        algebra: LeibnizAlgebra::from_entries(names, &entries)?,
        projection: data.projection,
        section: data.section,
        kernel: ideal.clone(),
    })
}

/// `L* = L / Ker(L)`.
pub fn liezation(alg: &LeibnizAlgebra) -> Result<QuotientAlgebra> {
    quotient(alg, &ker_ideal(alg))
}

/// Checks that no ideal spanned by a proper subset of `Ker(L)`'s canonical
/// basis has a Lie quotient. Only subsets of up to 12 basis vectors are
/// enumerated; larger liezators are reported as unchecked (`None`).
pub fn liezator_minimality_probe(alg: &LeibnizAlgebra) -> Option<bool> {
    let ker = ker_ideal(alg);
    let basis = ker.basis_vectors();
    if basis.len() > 12 {
        return None;
    }
    let total = 1usize << basis.len();
    for mask in 0..total - 1 {
        let gens: Vec<Vector> = (0..basis.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| basis[b].clone())
            .collect();
        let sub = Subspace::from_generators(alg.dim(), &gens);
        if let Ok(q) = quotient(alg, &sub) {
            if q.algebra.is_lie() {
                return Some(false);
            }
        }
    }
    Some(true)
}

fn stacked_nullspace(n: usize, blocks: Vec<Matrix>) -> Subspace {
    if blocks.is_empty() {
        return Subspace::full(n);
    }
    Matrix::vstack(n, &blocks).expect("square blocks").nullspace()
}

/// `Z^l(L) = { x : [x, L] = 0 }`, the common kernel of the right
/// multiplications by basis elements.
pub fn left_center(alg: &LeibnizAlgebra) -> Subspace {
    let n = alg.dim();
    stacked_nullspace(n, (0..n).map(|j| alg.r_basis(j)).collect())
}

/// `Z^r(L) = { x : [L, x] = 0 }`.
pub fn right_center(alg: &LeibnizAlgebra) -> Subspace {
    let n = alg.dim();
    stacked_nullspace(n, (0..n).map(|j| alg.l_basis(j)).collect())
}

/// Largest subspace of `x` with `[x, U] ⊂ U`.
pub fn left_normalizer(alg: &LeibnizAlgebra, u: &Subspace) -> Result<Subspace> {
    check(alg, u)?;
    let ann = u.annihilator();
    let blocks = u.basis_vectors().iter().map(|b| &ann * &alg.r(b)).collect();
    Ok(stacked_nullspace(alg.dim(), blocks))
}

/// Largest subspace of `x` with `[U, x] ⊂ U`.
pub fn right_normalizer(alg: &LeibnizAlgebra, u: &Subspace) -> Result<Subspace> {
    check(alg, u)?;
    let ann = u.annihilator();
    let blocks = u.basis_vectors().iter().map(|b| &ann * &alg.l(b)).collect();
    Ok(stacked_nullspace(alg.dim(), blocks))
}

fn closure(alg: &LeibnizAlgebra, v: &Subspace, mut grow: impl FnMut(&Subspace) -> Subspace) -> Subspace {
    let mut w = v.clone();
    loop {
        let next = w.join(&grow(&w));
        if next.dim() == w.dim() {
            return w;
        }
        debug_assert!(next.dim() <= alg.dim());
        w = next;
    }
}

/// Smallest two-sided ideal containing `v`.
pub fn ideal_closure(alg: &LeibnizAlgebra, v: &Subspace) -> Result<Subspace> {
    check(alg, v)?;
    let full = Subspace::full(alg.dim());
    Ok(closure(alg, v, |w| product(alg, &full, w).join(&product(alg, w, &full))))
}

/// Smallest subalgebra containing `v`.
pub fn subalgebra_closure(alg: &LeibnizAlgebra, v: &Subspace) -> Result<Subspace> {
    check(alg, v)?;
    Ok(closure(alg, v, |w| product(alg, w, w)))
}

/// Whether `v` generates `L` as an algebra.
pub fn generates(alg: &LeibnizAlgebra, v: &Subspace) -> Result<bool> {
    Ok(subalgebra_closure(alg, v)?.is_full())
}

/// `dim L - dim [L, L]`.
pub fn min_generators(alg: &LeibnizAlgebra) -> usize {
    alg.dim() - commutant(alg).dim()
}
