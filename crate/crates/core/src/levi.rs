//! Levi decomposition `L = S + R` and the reductive criterion.
//!
//! Both the Lie and the Leibniz case reduce to splitting extensions
//! `0 -> A -> F -> S -> 0` with `[A, A] = 0` over a semisimple `S`. With a
//! linear section `sigma` and an unknown `eta: S -> A`, the map
//! `s -> sigma(s) - eta(s)` is a homomorphism exactly when
//!
//! `[sigma x, sigma y] - sigma[x, y] = [sigma x, eta y] + [eta x, sigma y] - eta[x, y]`
//!
//! which is linear in `eta`. For the liezator the middle term vanishes since
//! `[Ker, L] = 0`.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::exactla::vector::{self, Vector};
use crate::exactla::{solve, Matrix, Subspace};
use crate::radicals::{lie_radical, radical};
use crate::structure::{self, QuotientAlgebra};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub semisimple_part: Subspace,
    pub radical_part: Subspace,
    pub verified: LeviChecks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeviChecks {
    pub is_subalgebra: bool,
    pub is_semisimple_lie: bool,
    pub trivial_intersection: bool,
    pub spans: bool,
}

impl LeviChecks {
    pub fn all(&self) -> bool {
        self.is_subalgebra && self.is_semisimple_lie && self.trivial_intersection && self.spans
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveReport {
    /// `[L, Z^l(L)] = 0`
    pub center_is_central: bool,
    /// `L / Z^l(L)` has zero radical.
    pub quotient_is_semisimple: bool,
    /// Present when both hypotheses hold.
    pub conclusion: Option<ReductiveConclusion>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductiveConclusion {
    pub is_lie: bool,
    /// `[L, R] = [R, L] = 0`
    pub radical_is_central: bool,
    /// `[S, R] = [R, S] = 0`
    pub levi_is_direct: bool,
}

impl ReductiveReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.center_is_central && self.quotient_is_semisimple
    }

    /// Hypotheses hold and every part of the conclusion was verified.
    pub fn confirmed(&self) -> bool {
        self.conclusion
            .is_some_and(|c| c.is_lie && c.radical_is_central && c.levi_is_direct)
    }
}

/// Splits `quotient.kernel -> preimage(sub) -> sub` where `sub` is a
/// semisimple subalgebra of the quotient and the kernel is abelian. Returns
/// the corrected lifts of the canonical basis of `sub`.
fn split(alg: &LeibnizAlgebra, quotient: &QuotientAlgebra, sub: &Subspace) -> Result<Vec<Vector>> {
    let n = alg.dim();
    let kernel = quotient.kernel.basis_vectors();
    let basis = sub.basis_vectors();
    let lifts: Vec<Vector> = basis.iter().map(|s| quotient.lift(s)).collect();
    let (m, d) = (basis.len(), kernel.len());
    if d == 0 {
        return Ok(lifts);
    }
    // structure constants of `sub` in its canonical basis
    let consts: Vec<Vec<Vector>> = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| sub.coordinates(&quotient.algebra.br(x, y)).expect("sub is a subalgebra"))
                .collect()
        })
        .collect();
    // unknown eta(s_p) = sum_b y[p * d + b] a_b
    let unknowns = m * d;
    let mut system = Matrix::zeros(m * m * n, unknowns);
    let mut rhs = Vec::with_capacity(m * m * n);
    for p in 0..m {
        for q in 0..m {
            let row0 = (p * m + q) * n;
            let mut f = alg.br(&lifts[p], &lifts[q]);
            for (r, c) in consts[p][q].iter().enumerate() {
                vector::axpy(&mut f, &-c, &lifts[r]);
            }
            rhs.extend(f);
            for (b, a) in kernel.iter().enumerate() {
                let left = alg.br(&lifts[p], a);
                let right = alg.br(a, &lifts[q]);
                for k in 0..n {
                    add(&mut system, row0 + k, q * d + b, &left[k]);
                    add(&mut system, row0 + k, p * d + b, &right[k]);
                    for (r, c) in consts[p][q].iter().enumerate() {
                        add(&mut system, row0 + k, r * d + b, &-(c * &a[k]));
                    }
                }
            }
        }
    }
    let y = solve(&system, &rhs)?.ok_or_else(|| {
        Error::SplittingFailed(format!("{m}-dimensional factor over a {d}-dimensional kernel"))
    })?;
    Ok(lifts
        .iter()
        .enumerate()
        .map(|(p, u)| {
            let mut v = u.clone();
            for (b, a) in kernel.iter().enumerate() {
                vector::axpy(&mut v, &-y[p * d + b].clone(), a);
            }
            v
        })
        .collect())
}

fn add(m: &mut Matrix, i: usize, j: usize, v: &crate::Rational) {
    let cur = m.get(i, j) + v;
    m.set(i, j, cur);
}

/// A Levi subalgebra of a Lie algebra, by induction on the derived series of
/// the radical.
pub fn lie_levi(alg: &LeibnizAlgebra) -> Result<Subspace> {
    let rad = lie_radical(alg)?;
    let n = alg.dim();
    if rad.is_zero() {
        return Ok(Subspace::full(n));
    }
    // last nonzero term of the derived series of the radical
    let mut abelian = rad;
    loop {
        let next = structure::product(alg, &abelian, &abelian);
        if next.is_zero() {
            break;
        }
        abelian = next;
    }
    let q = structure::quotient(alg, &abelian)?;
    let sbar = lie_levi(&q.algebra)?;
    if sbar.is_zero() {
        return Ok(Subspace::zero(n));
    }
    let lifts = split(alg, &q, &sbar)?;
    Subspace::span(n, &lifts)
}

/// `S + R` with `S` a semisimple Lie subalgebra and `R` the radical.
pub fn levi_decomposition(alg: &LeibnizAlgebra) -> Result<LeviDecomposition> {
    let rad = radical(alg)?;
    let n = alg.dim();
    let q = structure::liezation(alg)?;
    let s_star = lie_levi(&q.algebra)?;
    let s = if s_star.is_zero() {
        Subspace::zero(n)
    } else {
        Subspace::span(n, &split(alg, &q, &s_star)?)?
    };
    let verified = levi_checks(alg, &s, &rad)?;
    Ok(LeviDecomposition {
        semisimple_part: s,
        radical_part: rad,
        verified,
    })
}

fn levi_checks(alg: &LeibnizAlgebra, s: &Subspace, rad: &Subspace) -> Result<LeviChecks> {
    let is_subalgebra = structure::is_subalgebra(alg, s)?;
    let is_semisimple_lie = is_subalgebra && {
        let induced = structure::restrict(alg, s)?;
        induced.is_lie() && lie_radical(&induced)?.is_zero()
    };
    Ok(LeviChecks {
        is_subalgebra,
        is_semisimple_lie,
        trivial_intersection: s.meet(rad).is_zero(),
        spans: s.join(rad).is_full(),
    })
}

/// Whether `s` is a Levi subalgebra of `alg`.
pub fn verify_levi(alg: &LeibnizAlgebra, s: &Subspace) -> bool {
    radical(alg)
        .and_then(|rad| levi_checks(alg, s, &rad))
        .is_ok_and(|c| c.all())
}

/// With `[L, Z^l] = 0` and `L / Z^l` semisimple, `L` should be a reductive
/// Lie algebra; the conclusion is verified when the hypotheses hold.
pub fn reductive_check(alg: &LeibnizAlgebra) -> Result<ReductiveReport> {
    let n = alg.dim();
    let full = Subspace::full(n);
    let zl = structure::left_center(alg);
    let center_is_central = structure::product(alg, &full, &zl).is_zero();
    let quotient = structure::quotient(alg, &zl)?;
    let quotient_is_semisimple = quotient.algebra.is_lie() && lie_radical(&quotient.algebra)?.is_zero();
    let conclusion = if center_is_central && quotient_is_semisimple {
        let levi = levi_decomposition(alg)?;
        let (s, r) = (&levi.semisimple_part, &levi.radical_part);
        let zero = |a: &Subspace, b: &Subspace| structure::product(alg, a, b).is_zero();
        Some(ReductiveConclusion {
            is_lie: alg.is_lie(),
            radical_is_central: zero(&full, r) && zero(r, &full),
            levi_is_direct: zero(s, r) && zero(r, s),
        })
    } else {
        None
    };
    Ok(ReductiveReport {
        center_is_central,
        quotient_is_semisimple,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn lie_levi_examples() {
        assert!(lie_levi(&catalog::sl2()).unwrap().is_full());
        let s = lie_levi(&catalog::sl2_k2()).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(verify_levi(&catalog::sl2_k2(), &s));
        assert!(lie_levi(&catalog::r2()).unwrap().is_zero());
        assert!(lie_levi(&catalog::heis3()).unwrap().is_zero());
        assert_eq!(lie_levi(&catalog::l2i()), Err(Error::NotLie));
    }

    #[test]
    fn levi_examples() {
        for alg in [catalog::sl2_k2(), catalog::sl2_plus_l2ii(), catalog::sl2_hemi_k2()] {
            let d = levi_decomposition(&alg).unwrap();
            assert_eq!((d.semisimple_part.dim(), d.radical_part.dim()), (3, 2));
            assert!(d.verified.all());
        }
        let d = levi_decomposition(&catalog::l2ii()).unwrap();
        assert!(d.semisimple_part.is_zero() && d.radical_part.is_full() && d.verified.all());
        let sl2 = catalog::sl2();
        assert_eq!(levi_decomposition(&sl2).unwrap().semisimple_part, lie_levi(&sl2).unwrap());
    }

    #[test]
    fn skewed_section_is_corrected() {
        // conjugate the semidirect product so the canonical section is not a subalgebra
        let p = Matrix::from_int_rows(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[1, 0, 2, 1, 0],
            &[0, -1, 1, 0, 1],
        ]);
        for alg in [catalog::sl2_k2(), catalog::sl2_hemi_k2()] {
            let alg = alg.change_basis(&p).unwrap();
            let d = levi_decomposition(&alg).unwrap();
            assert_eq!(d.semisimple_part.dim(), 3);
            assert!(d.verified.all());
            assert!(!structure::is_subalgebra(&alg, &Subspace::span(5, &[
                crate::exactla::vector::unit(5, 0),
                crate::exactla::vector::unit(5, 1),
                crate::exactla::vector::unit(5, 2),
            ]).unwrap()).unwrap());
        }
    }

    #[test]
    fn verify_levi_rejects() {
        let alg = catalog::sl2_k2();
        let rad = radical(&alg).unwrap();
        assert!(!verify_levi(&alg, &rad));
        assert!(!verify_levi(&catalog::sl2(), &Subspace::zero(3)));
    }

    #[test]
    fn reductive_examples() {
        let r = reductive_check(&catalog::sl2_plus_k()).unwrap();
        assert!(r.hypotheses_hold() && r.confirmed());
        let r = reductive_check(&catalog::l2ii()).unwrap();
        assert!(!r.center_is_central && r.conclusion.is_none());
        assert!(reductive_check(&catalog::sl2()).unwrap().confirmed());
    }
}
