#![allow(dead_code)]

use leibniz_core::exactla::vector::Vector;
use leibniz_core::{catalog, LeibnizAlgebra, Matrix, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(-4..=4);
    let q: i64 = rng.gen_range(1..=3);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| Rational::from_integer(rng.gen_range(-2i64..=2).into()));
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Corpus algebras of dimension at most `max_dim`.
pub fn small_corpus(max_dim: usize) -> Vec<(&'static str, LeibnizAlgebra)> {
    catalog::all().into_iter().filter(|(_, a)| a.dim() <= max_dim).collect()
}

/// Valid left Leibniz tensors obtained by random basis changes of the small
/// corpus entries.
pub fn random_leibniz(count: usize, max_dim: usize, seed: u64) -> Vec<LeibnizAlgebra> {
    let base = small_corpus(max_dim);
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let (_, alg) = &base[i % base.len()];
            let p = random_invertible(&mut rng, alg.dim());
            alg.change_basis(&p).expect("invertible")
        })
        .collect()
}
