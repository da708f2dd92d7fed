//! Characteristic polynomials and their rational roots.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::Rational;

/// Coefficients of `det(t I - m)`, lowest degree first (Faddeev–LeVerrier,
/// exact in characteristic zero).
pub fn characteristic_polynomial(m: &Matrix) -> Vec<Rational> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let id = Matrix::identity(n);
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        acc = &(m * &acc) + &id.scale(&coeffs[n - k + 1]);
        let am = m * &acc;
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Distinct rational roots of a polynomial (coefficients lowest degree
/// first), sorted in decreasing order.
pub fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let shift = p.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
        p.drain(..shift);
    }
    if p.len() > 1 {
        let ints = primitive_integer_coefficients(&p);
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let nums = divisors(&constant);
        let dens = divisors(&lead);
        for q in &dens {
            for a in &nums {
                if !a.gcd(q).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = Rational::new(a * BigInt::from(sign), q.clone());
                    if eval(&p, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    roots.dedup();
    roots
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn primitive_integer_coefficients(p: &[Rational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
