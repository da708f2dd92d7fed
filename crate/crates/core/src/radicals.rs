//! Radical, nilradical, Engel flags and Lie flags.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::LeibnizAlgebra;
use crate::exactla::vector::{self, Vector};
use crate::exactla::{characteristic_polynomial, rational_roots, Flag, Matrix, Rational, Subspace};
use crate::structure;
use crate::{Error, Result};

/// Radical and nilradical with the inclusions that were checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub radical: Subspace,
    pub nilradical: Subspace,
    pub checks: RadicalChecks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalChecks {
    pub radical_is_ideal: bool,
    pub radical_is_solvable: bool,
    pub nilradical_is_ideal: bool,
    pub nilradical_is_nilpotent: bool,
    pub nilradical_in_radical: bool,
    pub ker_in_nilradical: bool,
    pub right_center_in_nilradical: bool,
    /// `[L, R] ⊂ N`
    pub l_radical_in_nilradical: bool,
    /// `[R, R] ⊂ N`
    pub rr_in_nilradical: bool,
}

/// The preimage in `L` of the nilradical of the liezation, against the
/// nilradical of `L` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageCheck {
    pub preimage: Subspace,
    pub preimage_is_nilpotent: bool,
    pub nilradical: Subspace,
}

impl PreimageCheck {
    /// True when the preimage is not the nilradical.
    pub fn is_discrepant(&self) -> bool {
        !self.preimage_is_nilpotent || self.preimage != self.nilradical
    }
}

fn require_left_leibniz(alg: &LeibnizAlgebra) -> Result<()> {
    if !alg.is_left_leibniz() {
        return Err(Error::InvalidAlgebra("left Leibniz identity fails".into()));
    }
    Ok(())
}

/// `kappa(e_i, e_j) = tr(l_i l_j)`
pub fn killing_form(alg: &LeibnizAlgebra) -> Matrix {
    let n = alg.dim();
    let ls: Vec<Matrix> = (0..n).map(|i| alg.l_basis(i)).collect();
    Matrix::from_fn(n, n, |i, j| (&ls[i] * &ls[j]).trace())
}

/// Radical of a Lie algebra: the Killing-orthogonal of `[L, L]`.
pub fn lie_radical(alg: &LeibnizAlgebra) -> Result<Subspace> {
    if !alg.is_lie() {
        return Err(Error::NotLie);
    }
    let kappa = killing_form(alg);
    let rows: Vec<Vector> = structure::commutant(alg)
        .basis_vectors()
        .iter()
        .map(|c| kappa.apply(c))
        .collect();
    if rows.is_empty() {
        return Ok(Subspace::full(alg.dim()));
    }
    Ok(Matrix::from_rows(alg.dim(), &rows)?.nullspace())
}

/// Largest solvable ideal: the preimage of the radical of the liezation.
pub fn radical(alg: &LeibnizAlgebra) -> Result<Subspace> {
    require_left_leibniz(alg)?;
    let q = structure::liezation(alg)?;
    Ok(q.preimage(&lie_radical(&q.algebra)?))
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

fn unflat(n: usize, v: &[Rational]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

/// Span of all nonempty products of the generators.
fn associative_span(n: usize, gens: &[Matrix]) -> Subspace {
    let mut span = Subspace::span(n * n, &gens.iter().map(flat).collect::<Vec<_>>()).expect("n x n generators");
    loop {
        let products: Vec<Vector> = span
            .basis_vectors()
            .iter()
            .flat_map(|a| {
                let a = unflat(n, a);
                gens.iter().map(move |g| flat(&(&a * g))).collect::<Vec<_>>()
            })
            .collect();
        let grown = span.join(&Subspace::span(n * n, &products).expect("n x n products"));
        if grown.dim() == span.dim() {
            return span;
        }
        span = grown;
    }
}

/// `{ a in A : tr(ab) = 0 for all b in A }`
fn trace_radical(n: usize, algebra: &Subspace) -> Subspace {
    let basis: Vec<Matrix> = algebra.basis_vectors().iter().map(|v| unflat(n, v)).collect();
    if basis.is_empty() {
        return Subspace::zero(n * n);
    }
    let gram = Matrix::from_fn(basis.len(), basis.len(), |p, q| (&basis[p] * &basis[q]).trace());
    let coeffs = gram.nullspace();
    let members: Vec<Vector> = coeffs
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut m = Matrix::zeros(n, n);
            for (ci, b) in c.iter().zip(&basis) {
                m = &m + &b.scale(ci);
            }
            flat(&m)
        })
        .collect();
    Subspace::span(n * n, &members).expect("n x n members")
}

/// Nilradical candidate before verification: the elements `x` of the
/// radical whose `l_x` lies in the trace radical of the associative algebra
/// generated by `l_r`, `r` in the radical.
fn nilradical_candidate(alg: &LeibnizAlgebra, rad: &Subspace) -> Subspace {
    let n = alg.dim();
    let rbasis = rad.basis_vectors();
    if rbasis.is_empty() {
        return Subspace::zero(n);
    }
    let gens: Vec<Matrix> = rbasis.iter().map(|r| alg.l(r)).collect();
    let j = trace_radical(n, &associative_span(n, &gens));
    // y with sum_i y_i l_{r_i} in J
    let assembly = Matrix::from_columns(n * n, &gens.iter().map(flat).collect::<Vec<_>>()).expect("flattened");
    let conditions = &j.annihilator() * &assembly;
    let ys = conditions.nullspace();
    let members: Vec<Vector> = ys.basis_vectors().iter().map(|y| rad.combination(y)).collect();
    Subspace::span(n, &members).expect("length n")
}

fn probes(n: usize, nil: &Subspace) -> Vec<Vector> {
    let section = nil.quotient_data().section;
    let mut out = section.column_vectors();
    if out.len() > 1 {
        let mut sum = vector::zero(n);
        let mut weighted = vector::zero(n);
        for (j, v) in out.iter().enumerate() {
            sum = vector::add(&sum, v);
            vector::axpy(&mut weighted, &Rational::from_integer((j as i64 + 1).into()), v);
        }
        out.push(sum);
        out.push(weighted);
    }
    out
}

/// Maximal nilpotent ideal.
///
/// The candidate from the trace-radical characterization is checked to be
/// an ideal, nilpotent, and not enlargeable by any probe vector (each probe
/// generates, together with `N`, a non-nilpotent ideal). A failed check is
/// an error.
pub fn nilradical(alg: &LeibnizAlgebra) -> Result<Subspace> {
    let rad = radical(alg)?;
    let n = alg.dim();
    let nil = nilradical_candidate(alg, &rad);
    if !structure::is_ideal(alg, &nil)? {
        return Err(Error::NilradicalUnverified("candidate is not an ideal".into()));
    }
    if !structure::is_nilpotent_subalgebra(alg, &nil)? {
        return Err(Error::NilradicalUnverified("candidate is not nilpotent".into()));
    }
    for y in probes(n, &nil) {
        let with = nil.join(&Subspace::span(n, core::slice::from_ref(&y))?);
        let closure = structure::ideal_closure(alg, &with)?;
        if structure::is_nilpotent_subalgebra(alg, &closure)? {
            return Err(Error::NilradicalUnverified(format!(
                "candidate extends to a nilpotent ideal through {y:?}"
            )));
        }
    }
    Ok(nil)
}

/// Radical, nilradical and the inclusions between them and the other
/// distinguished ideals.
pub fn radical_report(alg: &LeibnizAlgebra) -> Result<RadicalReport> {
    let rad = radical(alg)?;
    let nil = nilradical(alg)?;
    let full = Subspace::full(alg.dim());
    let checks = RadicalChecks {
        radical_is_ideal: structure::is_ideal(alg, &rad)?,
        radical_is_solvable: structure::is_solvable_subalgebra(alg, &rad)?,
        nilradical_is_ideal: structure::is_ideal(alg, &nil)?,
        nilradical_is_nilpotent: structure::is_nilpotent_subalgebra(alg, &nil)?,
        nilradical_in_radical: nil.within(&rad),
        ker_in_nilradical: structure::ker_ideal(alg).within(&nil),
        right_center_in_nilradical: structure::right_center(alg).within(&nil),
        l_radical_in_nilradical: structure::product(alg, &full, &rad).within(&nil),
        rr_in_nilradical: structure::product(alg, &rad, &rad).within(&nil),
    };
    Ok(RadicalReport {
        radical: rad,
        nilradical: nil,
        checks,
    })
}

/// Compares the nilradical with the preimage of the liezation's nilradical.
pub fn liezation_preimage_check(alg: &LeibnizAlgebra) -> Result<PreimageCheck> {
    let q = structure::liezation(alg)?;
    let preimage = q.preimage(&nilradical(&q.algebra)?);
    Ok(PreimageCheck {
        preimage_is_nilpotent: structure::is_nilpotent_subalgebra(alg, &preimage)?,
        preimage,
        nilradical: nilradical(alg)?,
    })
}

fn joint_kernel(n: usize, ops: &[Matrix]) -> Subspace {
    if ops.is_empty() {
        return Subspace::full(n);
    }
    Matrix::vstack(n, ops).expect("n columns").nullspace()
}

/// Builds a complete flag invariant under `ops` by repeatedly choosing a
/// vector of `V / W` with `pick` and adding its lift to `W`.
fn build_flag(n: usize, ops: &[Matrix], mut pick: impl FnMut(&[Matrix]) -> Result<Vector>) -> Result<Flag> {
    let mut w = Subspace::zero(n);
    let mut vs = Vec::with_capacity(n);
    while w.dim() < n {
        let data = w.quotient_data();
        let induced: Vec<Matrix> = ops.iter().map(|t| &(&data.projection * t) * &data.section).collect();
        let v = data.section.apply(&pick(&induced)?);
        w = w.join(&Subspace::span(n, core::slice::from_ref(&v))?);
        vs.push(v);
    }
    Flag::from_basis(n, &vs)
}

/// Complete flag in which every `l_x` and every `r_x` is strictly upper
/// triangular. Each step takes the lexicographically first canonical basis
/// vector of the common kernel of the induced left and right multiplications.
pub fn engel_flag(alg: &LeibnizAlgebra) -> Result<Flag> {
    let n = alg.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| alg.l_basis(i)).collect();
    if let Some(i) = lefts.iter().position(|m| !m.is_nilpotent()) {
        return Err(Error::NotEngelNilpotent(format!("l_{} is not nilpotent", alg.basis_names()[i])));
    }
    let mut ops = lefts;
    ops.extend((0..n).map(|i| alg.r_basis(i)));
    let flag = build_flag(n, &ops, |induced| {
        let m = induced.first().map_or(0, Matrix::cols);
        joint_kernel(m, induced)
            .lex_first_basis_vector()
            .ok_or_else(|| Error::NotEngelNilpotent("no common null vector".into()))
    })?;
    if !ops.iter().all(|t| flag.is_strictly_triangularizing(t)) {
        return Err(Error::NotEngelNilpotent("flag does not triangularize".into()));
    }
    Ok(flag)
}

/// Lexicographically first common null vector of all `l_x` and `r_x`.
pub fn common_null_vector(alg: &LeibnizAlgebra) -> Option<Vector> {
    let n = alg.dim();
    let ops: Vec<Matrix> = (0..n).flat_map(|i| [alg.l_basis(i), alg.r_basis(i)]).collect();
    joint_kernel(n, &ops).lex_first_basis_vector()
}

/// With every `l_x` nilpotent: every `r_x` is nilpotent, the Engel flag makes
/// all `l_x` and `r_x` strictly upper triangular, and some nonzero vector is
/// killed by all of them.
pub fn strong_engel_check(alg: &LeibnizAlgebra) -> bool {
    let n = alg.dim();
    let Ok(flag) = engel_flag(alg) else {
        return false;
    };
    (0..n).all(|i| {
        let r = alg.r_basis(i);
        r.is_nilpotent() && flag.is_strictly_triangularizing(&r) && flag.is_strictly_triangularizing(&alg.l_basis(i))
    }) && (n == 0 || common_null_vector(alg).is_some())
}

/// Matrix of `t` restricted to an invariant subspace, in its canonical basis.
fn restrict_op(t: &Matrix, sub: &Subspace) -> Matrix {
    let cols: Vec<Vector> = sub
        .basis_vectors()
        .iter()
        .map(|b| sub.coordinates(&t.apply(b)).expect("invariant subspace"))
        .collect();
    Matrix::from_columns(sub.dim(), &cols).expect("square restriction")
}

/// Common eigenvector of commuting operators on the invariant subspace `u`,
/// trying eigenvalues of each operator in decreasing order.
fn common_eigenvector(ops: &[Matrix], u: &Subspace) -> Option<Vector> {
    let Some((t, rest)) = ops.split_first() else {
        return u.lex_first_basis_vector();
    };
    let n = u.ambient_dim();
    let restricted = restrict_op(t, u);
    for lambda in rational_roots(&characteristic_polynomial(&restricted)) {
        let shifted = t - &Matrix::identity(n).scale(&lambda);
        let eigenspace = u.meet(&shifted.nullspace());
        if let Some(v) = common_eigenvector(rest, &eigenspace) {
            return Some(v);
        }
    }
    None
}

/// Complete flag invariant under every `l_x`, for a solvable algebra whose
/// left multiplications have rational eigenvalues. In the adapted basis every
/// `l_x` is upper triangular.
pub fn lie_flag(alg: &LeibnizAlgebra) -> Result<Flag> {
    if !structure::is_solvable(alg) {
        return Err(Error::NotSolvable);
    }
    let n = alg.dim();
    let lefts: Vec<Matrix> = (0..n).map(|i| alg.l_basis(i)).collect();
    let flag = build_flag(n, &lefts, |induced| {
        let m = induced.first().map_or(0, Matrix::cols);
        // common eigenvectors are killed by every commutator; that kernel is
        // invariant and the operators commute on it
        let commutators: Vec<Matrix> = induced
            .iter()
            .enumerate()
            .flat_map(|(i, a)| induced[i + 1..].iter().map(move |b| a.commutator(b)))
            .collect();
        let w0 = joint_kernel(m, &commutators);
        common_eigenvector(induced, &w0).ok_or(Error::NotSplitOverField)
    })?;
    if !lefts.iter().all(|t| flag.is_invariant(t)) {
        return Err(Error::InvalidFlag("flag is not invariant under left multiplication".into()));
    }
    Ok(flag)
}

/// All `l_x` and `r_x` for basis `x` have zero determinant.
pub fn multiplications_degenerate(alg: &LeibnizAlgebra) -> bool {
    (0..alg.dim()).all(|i| alg.l_basis(i).determinant().is_zero() && alg.r_basis(i).determinant().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::vector::from_ints;

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        let vs: Vec<Vector> = vs.iter().map(|v| from_ints(v)).collect();
        Subspace::span(n, &vs).unwrap()
    }

    #[test]
    fn lie_radical_examples() {
        assert!(lie_radical(&LeibnizAlgebra::abelian(2)).unwrap().is_full());
        assert!(lie_radical(&catalog::sl2()).unwrap().is_zero());
        assert!(lie_radical(&catalog::r2()).unwrap().is_full());
        assert_eq!(lie_radical(&catalog::l2i()), Err(Error::NotLie));
        assert_eq!(lie_radical(&catalog::sl2_k2()).unwrap(), span(5, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]));
    }

    #[test]
    fn radical_examples() {
        assert!(radical(&catalog::l2ii()).unwrap().is_full());
        assert!(radical(&catalog::sl2()).unwrap().is_zero());
        assert_eq!(radical(&catalog::sl2_plus_l2ii()).unwrap(), span(5, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]));
        assert_eq!(radical(&catalog::sl2_hemi_k2()).unwrap().dim(), 2);
    }

    #[test]
    fn nilradical_examples() {
        assert_eq!(nilradical(&catalog::l2ii()).unwrap(), span(2, &[&[1, 0]]));
        assert!(nilradical(&catalog::heis3()).unwrap().is_full());
        assert!(nilradical(&catalog::l2i()).unwrap().is_full());
        assert_eq!(nilradical(&catalog::r2()).unwrap(), span(2, &[&[0, 1]]));
        assert!(nilradical(&catalog::sl2()).unwrap().is_zero());
        assert_eq!(nilradical(&catalog::rot2()).unwrap(), span(3, &[&[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn preimage_discrepancy_on_l2ii() {
        let c = liezation_preimage_check(&catalog::l2ii()).unwrap();
        assert!(c.preimage.is_full());
        assert!(!c.preimage_is_nilpotent);
        assert!(c.is_discrepant());
        assert!(!liezation_preimage_check(&catalog::heis3()).unwrap().is_discrepant());
    }

    #[test]
    fn radical_report_checks() {
        let r = radical_report(&catalog::sl2_k2()).unwrap();
        assert!(r.checks.l_radical_in_nilradical && r.checks.ker_in_nilradical);
        // the right center of L2ii is span{a - b}, outside N = span{a}
        let r = radical_report(&catalog::l2ii()).unwrap();
        assert!(!r.checks.right_center_in_nilradical);
    }

    #[test]
    fn engel_examples() {
        let f = engel_flag(&catalog::l2i()).unwrap();
        assert_eq!(f.chain()[1], span(2, &[&[1, 0]]));
        assert!(f.is_strictly_triangularizing(&catalog::l2i().l_basis(1)));
        let f = engel_flag(&catalog::heis3()).unwrap();
        assert_eq!(f.chain()[1], span(3, &[&[0, 0, 1]]));
        assert_eq!(f.chain()[2], span(3, &[&[0, 0, 1], &[0, 1, 0]]));
        assert!(engel_flag(&LeibnizAlgebra::abelian(3)).is_ok());
        assert!(matches!(engel_flag(&catalog::l2ii()), Err(Error::NotEngelNilpotent(_))));
    }

    #[test]
    fn engel_rejects_nilpotent_basis_of_sl2() {
        // e, f, h + e - f: all three left multiplications are nilpotent
        let p = Matrix::from_int_rows(&[&[1, 0, 1], &[0, 1, -1], &[0, 0, 1]]);
        let alg = catalog::sl2().change_basis(&p).unwrap();
        assert!((0..3).all(|i| alg.l_basis(i).is_nilpotent()));
        assert!(matches!(engel_flag(&alg), Err(Error::NotEngelNilpotent(_))));
    }

    #[test]
    fn strong_engel_examples() {
        assert!(strong_engel_check(&catalog::l2i()));
        assert_eq!(common_null_vector(&catalog::l2i()), Some(from_ints(&[1, 0])));
        assert!(strong_engel_check(&LeibnizAlgebra::abelian(2)));
        assert!(strong_engel_check(&catalog::heis3()));
    }

    #[test]
    fn lie_flag_examples() {
        let l2ii = catalog::l2ii();
        let f = lie_flag(&l2ii).unwrap();
        assert_eq!(f.chain()[1], span(2, &[&[1, 0]]));
        let lb = f.in_adapted_basis(&l2ii.l_basis(1));
        assert!(lb.is_upper_triangular());
        assert_eq!((lb.get(0, 0).clone(), lb.get(1, 1).clone()), (Rational::from_integer(1.into()), Rational::zero()));
        for alg in [catalog::heis3(), catalog::l2i(), LeibnizAlgebra::abelian(2)] {
            assert_eq!(lie_flag(&alg).unwrap(), engel_flag(&alg).unwrap());
        }
        assert_eq!(lie_flag(&catalog::rot2()), Err(Error::NotSplitOverField));
        assert_eq!(lie_flag(&catalog::sl2()), Err(Error::NotSolvable));
        assert!(lie_flag(&catalog::r2()).is_ok());
    }

    #[test]
    fn degeneracy() {
        for (name, alg) in catalog::all() {
            assert!(multiplications_degenerate(&alg), "{name}");
        }
    }
}
