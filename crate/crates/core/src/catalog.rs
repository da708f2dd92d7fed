//! Named algebras used by the tests, the corpus and the classification.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{IntBracket, LeibnizAlgebra};
use crate::exactla::Matrix;
use crate::reps::Bimodule;

fn build(names: &[&str], brackets: &[IntBracket<'_>]) -> LeibnizAlgebra {
    LeibnizAlgebra::from_int_brackets(names, brackets).expect("catalog algebra is well formed")
}

/// The one-dimensional (abelian) algebra.
pub fn abelian1() -> LeibnizAlgebra {
    build(&["a"], &[])
}

pub fn a2() -> LeibnizAlgebra {
    build(&["a", "b"], &[])
}

/// `[a, b] = -[b, a] = b`
pub fn r2() -> LeibnizAlgebra {
    build(&["a", "b"], &[(0, 1, &[(1, 1)]), (1, 0, &[(1, -1)])])
}

/// `[b, b] = a`
pub fn l2i() -> LeibnizAlgebra {
    build(&["a", "b"], &[(1, 1, &[(0, 1)])])
}

/// `[b, a] = a`, `[b, b] = a`
pub fn l2ii() -> LeibnizAlgebra {
    build(&["a", "b"], &[(1, 0, &[(0, 1)]), (1, 1, &[(0, 1)])])
}

/// Heisenberg algebra: `[x, y] = -[y, x] = z`.
pub fn heis3() -> LeibnizAlgebra {
    build(&["x", "y", "z"], &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])])
}

const SL2: [IntBracket<'static>; 6] = [
    (0, 1, &[(2, 1)]),
    (1, 0, &[(2, -1)]),
    (2, 0, &[(0, 2)]),
    (0, 2, &[(0, -2)]),
    (2, 1, &[(1, -2)]),
    (1, 2, &[(1, 2)]),
];

/// `sl_2` in the basis `e, f, h`.
pub fn sl2() -> LeibnizAlgebra {
    build(&["e", "f", "h"], &SL2)
}

/// Solvable Lie algebra where `a` rotates the plane `x, y`:
/// `[a, x] = y`, `[a, y] = -x`.
pub fn rot2() -> LeibnizAlgebra {
    build(
        &["a", "x", "y"],
        &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)]), (0, 2, &[(1, -1)]), (2, 0, &[(1, 1)])],
    )
}

// natural action of sl_2 on span(v1, v2): e v2 = v1, f v1 = v2, h v1 = v1, h v2 = -v2
const SL2_ON_K2: [IntBracket<'static>; 4] = [
    (0, 4, &[(3, 1)]),
    (1, 3, &[(4, 1)]),
    (2, 3, &[(3, 1)]),
    (2, 4, &[(4, -1)]),
];

const K2_ON_SL2: [IntBracket<'static>; 4] = [
    (4, 0, &[(3, -1)]),
    (3, 1, &[(4, -1)]),
    (3, 2, &[(3, -1)]),
    (4, 2, &[(4, 1)]),
];

/// Semidirect product of `sl_2` with its natural module (a Lie algebra).
pub fn sl2_k2() -> LeibnizAlgebra {
    let mut brackets: Vec<IntBracket<'static>> = SL2.to_vec();
    brackets.extend(SL2_ON_K2.iter().cloned());
    brackets.extend(K2_ON_SL2.iter().cloned());
    build(&["e", "f", "h", "v1", "v2"], &brackets)
}

/// `sl_2` acting on its natural module from the left only: `[x, v] = x v`,
/// `[v, x] = 0`. A non-Lie Leibniz algebra whose liezator is the module.
pub fn sl2_hemi_k2() -> LeibnizAlgebra {
    let mut brackets: Vec<IntBracket<'static>> = SL2.to_vec();
    brackets.extend(SL2_ON_K2.iter().cloned());
    build(&["e", "f", "h", "v1", "v2"], &brackets)
}

pub fn sl2_plus_l2ii() -> LeibnizAlgebra {
    sl2().direct_sum(&l2ii())
}

/// `sl_2` plus a one-dimensional center; reductive.
pub fn sl2_plus_k() -> LeibnizAlgebra {
    sl2().direct_sum(&LeibnizAlgebra::abelian_named(vec!["c".to_string()]).expect("one label"))
}

/// Every catalog algebra with its corpus name.
pub fn all() -> Vec<(&'static str, LeibnizAlgebra)> {
    vec![
        ("abelian1", abelian1()),
        ("a2", a2()),
        ("r2", r2()),
        ("l2i", l2i()),
        ("l2ii", l2ii()),
        ("heis3", heis3()),
        ("sl2", sl2()),
        ("rot2", rot2()),
        ("sl2_k2", sl2_k2()),
        ("sl2_plus_l2ii", sl2_plus_l2ii()),
        ("sl2_plus_k", sl2_plus_k()),
        ("sl2_hemi_k2", sl2_hemi_k2()),
    ]
}

pub fn by_name(name: &str) -> Option<LeibnizAlgebra> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, crate::Rational::from_integer(1.into()));
    m
}

/// A faithful bimodule of carrier dimension at most `dim + 1` for every
/// catalog algebra. Where the regular bimodule is already faithful it is used
/// as is.
pub fn faithful_bimodule(name: &str) -> Option<Bimodule> {
    let alg = by_name(name)?;
    let m = match name {
        // a acts by a nilpotent 2x2 block from the left
        "abelian1" => Bimodule::new(alg, 2, vec![unit_matrix(2, 0, 1)], vec![Matrix::zeros(2, 2)]),
        // commuting square-zero blocks E_13, E_23 on k^3
        "a2" => Bimodule::new(
            alg,
            3,
            vec![unit_matrix(3, 0, 2), unit_matrix(3, 1, 2)],
            vec![Matrix::zeros(3, 3); 2],
        ),
        // L_a = 0, L_b = E_31 - E_12, R_a = E_32, R_b = E_12 on k^3
        "l2i" => Bimodule::new(
            alg,
            3,
            vec![Matrix::zeros(3, 3), &unit_matrix(3, 2, 0) - &unit_matrix(3, 0, 1)],
            vec![unit_matrix(3, 2, 1), unit_matrix(3, 0, 1)],
        ),
        // x, y, z as strictly upper triangular 3x3 matrices, R = -L
        "heis3" => {
            let left = vec![unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)];
            let right = left.iter().map(|m| -m).collect();
            Bimodule::new(alg, 3, left, right)
        }
        // adjoint of sl2 on the first three coordinates, c by E_45; R = -L
        "sl2_plus_k" => {
            let mut left: Vec<Matrix> = (0..3)
                .map(|i| {
                    let ad = alg.left_mult(&crate::exactla::vector::unit(4, i)).expect("basis vector").matrix;
                    Matrix::from_fn(5, 5, |r, c| if r < 3 && c < 3 { ad.get(r, c).clone() } else { num_traits::Zero::zero() })
                })
                .collect();
            left.push(unit_matrix(5, 3, 4));
            let right = left.iter().map(|m| -m).collect();
            Bimodule::new(alg, 5, left, right)
        }
        _ => Ok(Bimodule::regular(&alg)),
    };
    Some(m.expect("fixture shapes are consistent"))
}
