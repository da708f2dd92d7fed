//! The Leibniz algebra value: structure constants, brackets, multiplication
//! operators, identity checks and derivations.
//!
//! Convention: `[e_i, e_j] = sum_k c[i][j][k] e_k`. Left multiplication is
//! `l_x(v) = [x, v]`, right multiplication is `r_x(v) = [v, x]`. An algebra is
//! left Leibniz when every `l_x` is a derivation:
//! `[a, [b, c]] = [[a, b], c] + [b, [a, c]]`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::exactla::vector::{self, Vector};
use crate::exactla::{Matrix, Rational, Subspace};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    dim: usize,
    names: Vec<String>,
    // c[(i * dim + j) * dim + k]
    constants: Vec<Rational>,
}

/// `(i, j, [(k, c), ...])`: `[e_i, e_j] = sum c e_k` with integer `c`.
pub type IntBracket<'a> = (usize, usize, &'a [(usize, i64)]);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultKind {
    Left,
    Right,
}

/// `l_x` or `r_x` as a matrix acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultOperator {
    pub kind: MultKind,
    pub element: Vector,
    pub matrix: Matrix,
}

/// Identities that can be checked on basis tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `[a,[b,c]] = [[a,b],c] + [b,[a,c]]`
    LeftLeibniz,
    /// `a(bc) = (ab)c - (ac)b`
    RightLeibniz,
    /// `r_[a,b] = r_b r_a + l_a r_b`
    RightOfBracketComposition,
    /// `r_[a,b] = l_a r_b - r_b l_a`
    RightOfBracketCommutator,
    /// `[[a,b],c] = -[[b,a],c]`
    SkewUnderRightMultiplication,
    /// `[[a,a],b] = 0`
    SquareIsLeftCentral,
    /// `(r_x)^n = (-1)^(n-1) r_x (l_x)^(n-1)`
    RightPower { power: usize },
    /// `a(bm) = [ab]m + b(am)`
    BimoduleLeftLeft,
    /// `a(mb) = (am)b + m[ab]`
    BimoduleLeftRight,
    /// `m[ab] = (ma)b + a(mb)`
    BimoduleRightRight,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::LeftLeibniz => write!(f, "left Leibniz"),
            Identity::RightLeibniz => write!(f, "right Leibniz"),
            Identity::RightOfBracketComposition => write!(f, "r_[a,b] = r_b r_a + l_a r_b"),
            Identity::RightOfBracketCommutator => write!(f, "r_[a,b] = l_a r_b - r_b l_a"),
            Identity::SkewUnderRightMultiplication => write!(f, "[[a,b],c] = -[[b,a],c]"),
            Identity::SquareIsLeftCentral => write!(f, "[[a,a],b] = 0"),
            Identity::RightPower { power } => {
                write!(f, "(r_x)^{power} = (-1)^{} r_x (l_x)^{}", power - 1, power - 1)
            }
            Identity::BimoduleLeftLeft => write!(f, "a(bm) = [ab]m + b(am)"),
            Identity::BimoduleLeftRight => write!(f, "a(mb) = (am)b + m[ab]"),
            Identity::BimoduleRightRight => write!(f, "m[ab] = (ma)b + a(mb)"),
        }
    }
}

/// One failed instance of an identity: the basis indices it was evaluated on
/// and the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    pub witness: Vec<usize>,
    pub residual: Vector,
}

/// Every failed basis instance of the checked identities. Empty exactly when
/// the identities hold on all of the algebra (by multilinearity).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn of(&self, identity: Identity) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.identity == identity)
    }

    pub(crate) fn record(&mut self, identity: Identity, witness: &[usize], residual: Vector) {
        if !vector::is_zero(&residual) {
            self.violations.push(Violation {
                identity,
                witness: witness.to_vec(),
                residual,
            });
        }
    }
}

impl LeibnizAlgebra {
    /// Builds an algebra from a dense `n x n x n` tensor `c[i][j][k]`.
    pub fn new(names: Vec<String>, tensor: &[Vec<Vector>]) -> Result<Self> {
        let n = names.len();
        check_names(&names)?;
        if tensor.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: tensor.len(),
            });
        }
        let mut constants = Vec::with_capacity(n * n * n);
        for row in tensor {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for v in row {
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: v.len(),
                    });
                }
                constants.extend(v.iter().cloned());
            }
        }
        Ok(LeibnizAlgebra {
            dim: n,
            names,
            constants,
        })
    }

    /// Builds an algebra from its nonzero structure constants `(i, j, k, c)`.
    /// Repeated entries are added.
    pub fn from_entries(names: Vec<String>, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let n = names.len();
        check_names(&names)?;
        let mut constants = vector::zero(n * n * n);
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if *idx >= n {
                    return Err(Error::InvalidAlgebra(format!("basis index {idx} out of range for dimension {n}")));
                }
            }
            constants[(i * n + j) * n + k] += c;
        }
        Ok(LeibnizAlgebra {
            dim: n,
            names,
            constants,
        })
    }

    /// Integer-constant convenience constructor: each `(i, j, [(k, c), ...])`
    /// sets `[e_i, e_j] = sum c e_k`.
    pub fn from_int_brackets(names: &[&str], brackets: &[IntBracket<'_>]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let entries: Vec<(usize, usize, usize, Rational)> = brackets
            .iter()
            .flat_map(|(i, j, terms)| terms.iter().map(move |(k, c)| (*i, *j, *k, Rational::from_integer((*c).into()))))
            .collect();
        Self::from_entries(names, &entries)
    }

    /// The abelian algebra on the given basis labels.
    pub fn abelian_named(names: Vec<String>) -> Result<Self> {
        Self::from_entries(names, &[])
    }

    /// The abelian algebra of dimension `n` with labels `e0, e1, ...`.
    pub fn abelian(n: usize) -> Self {
        Self::abelian_named(default_names(n)).expect("default names are unique")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        let n = self.dim;
        self.constants
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c))
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.br(x, y))
    }

    pub(crate) fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vector::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    pub(crate) fn unit(&self, i: usize) -> Vector {
        vector::unit(self.dim, i)
    }

    pub fn left_mult(&self, x: &[Rational]) -> Result<MultOperator> {
        self.check_len(x.len())?;
        Ok(MultOperator {
            kind: MultKind::Left,
            element: x.to_vec(),
            matrix: self.l(x),
        })
    }

    pub fn right_mult(&self, x: &[Rational]) -> Result<MultOperator> {
        self.check_len(x.len())?;
        Ok(MultOperator {
            kind: MultKind::Right,
            element: x.to_vec(),
            matrix: self.r(x),
        })
    }

    /// Matrix of `v -> [x, v]`.
    pub(crate) fn l(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.br(x, &self.unit(j))).collect();
        Matrix::from_columns(self.dim, &cols).expect("square operator")
    }

    /// Matrix of `v -> [v, x]`.
    pub(crate) fn r(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.br(&self.unit(j), x)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square operator")
    }

    pub(crate) fn l_basis(&self, i: usize) -> Matrix {
        self.l(&self.unit(i))
    }

    pub(crate) fn r_basis(&self, i: usize) -> Matrix {
        self.r(&self.unit(i))
    }

    /// Residuals of `[a,[b,c]] - [[a,b],c] - [b,[a,c]]` on all basis triples.
    pub fn check_left_leibniz(&self) -> ViolationReport {
        let mut report = ViolationReport::default();
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let (ea, eb, ec) = (self.unit(a), self.unit(b), self.unit(c));
                    let lhs = self.br(&ea, self.basis_bracket(b, c));
                    let t1 = self.br(self.basis_bracket(a, b), &ec);
                    let t2 = self.br(&eb, self.basis_bracket(a, c));
                    report.record(Identity::LeftLeibniz, &[a, b, c], vector::sub(&vector::sub(&lhs, &t1), &t2));
                }
            }
        }
        report
    }

    /// Residuals of `x(yz) - (xy)z + (xz)y` on all basis triples.
    pub fn check_right_leibniz(&self) -> ViolationReport {
        let mut report = ViolationReport::default();
        for x in 0..self.dim {
            for y in 0..self.dim {
                for z in 0..self.dim {
                    let (ex, ez, ey) = (self.unit(x), self.unit(z), self.unit(y));
                    let lhs = self.br(&ex, self.basis_bracket(y, z));
                    let t1 = self.br(self.basis_bracket(x, y), &ez);
                    let t2 = self.br(self.basis_bracket(x, z), &ey);
                    report.record(Identity::RightLeibniz, &[x, y, z], vector::add(&vector::sub(&lhs, &t1), &t2));
                }
            }
        }
        report
    }

    pub fn is_left_leibniz(&self) -> bool {
        self.check_left_leibniz().is_empty()
    }

    pub fn is_right_leibniz(&self) -> bool {
        self.check_right_leibniz().is_empty()
    }

    /// Antisymmetric constants satisfying the left Leibniz (here: Jacobi)
    /// identity.
    pub fn is_lie(&self) -> bool {
        self.is_skew() && self.is_left_leibniz()
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                (0..self.dim).all(|k| *self.constant(i, j, k) == -self.constant(j, i, k))
            })
        })
    }

    /// The algebra with multiplication `x ∘ y = [y, x]`.
    pub fn opposite(&self) -> LeibnizAlgebra {
        let n = self.dim;
        let mut constants = vector::zero(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    constants[(i * n + j) * n + k] = self.constant(j, i, k).clone();
                }
            }
        }
        LeibnizAlgebra {
            dim: n,
            names: self.names.clone(),
            constants,
        }
    }

    /// Checks the consequences of the left Leibniz identity on all basis
    /// tuples:
    ///
    /// - `r_[a,b] = r_b r_a + l_a r_b`
    /// - `r_[a,b] = l_a r_b - r_b l_a`
    /// - `[[a,b],c] = -[[b,a],c]`
    /// - `[[a,a],b] = 0`
    /// - `(r_x)^n = (-1)^(n-1) r_x (l_x)^(n-1)` for `1 <= n <= dim`
    ///
    /// Operator identities are evaluated on each basis vector `c`; witnesses
    /// are `[a, b, c]` (or `[x, c]` for the power identity).
    pub fn identity_suite(&self) -> ViolationReport {
        let n = self.dim;
        let mut report = ViolationReport::default();
        let lefts: Vec<Matrix> = (0..n).map(|i| self.l_basis(i)).collect();
        let rights: Vec<Matrix> = (0..n).map(|i| self.r_basis(i)).collect();
        for a in 0..n {
            for b in 0..n {
                let r_ab = self.r(self.basis_bracket(a, b));
                let composition = &(&rights[b] * &rights[a]) + &(&lefts[a] * &rights[b]);
                let commutator = &(&lefts[a] * &rights[b]) - &(&rights[b] * &lefts[a]);
                let d1 = &r_ab - &composition;
                let d2 = &r_ab - &commutator;
                for c in 0..n {
                    report.record(Identity::RightOfBracketComposition, &[a, b, c], d1.column(c));
                    report.record(Identity::RightOfBracketCommutator, &[a, b, c], d2.column(c));
                    let skew = vector::add(
                        &self.br(self.basis_bracket(a, b), &self.unit(c)),
                        &self.br(self.basis_bracket(b, a), &self.unit(c)),
                    );
                    report.record(Identity::SkewUnderRightMultiplication, &[a, b, c], skew);
                }
                report.record(
                    Identity::SquareIsLeftCentral,
                    &[a, b],
                    self.br(self.basis_bracket(a, a), &self.unit(b)),
                );
            }
        }
        for x in 0..n {
            let mut r_pow = Matrix::identity(n);
            let mut l_pow = Matrix::identity(n);
            for power in 1..=n {
                r_pow = &r_pow * &rights[x];
                let mut rhs = &rights[x] * &l_pow;
                if power % 2 == 0 {
                    rhs = -&rhs;
                }
                let d = &r_pow - &rhs;
                for c in 0..n {
                    report.record(Identity::RightPower { power }, &[x, c], d.column(c));
                }
                l_pow = &l_pow * &lefts[x];
            }
        }
        report
    }

    /// `Der(L)` as a subspace of the `n^2`-dimensional operator space. An
    /// operator `D` is flattened row-major: coordinate `m * n + k` is `D[m][k]`,
    /// the `e_m` component of `D e_k`.
    pub fn derivations(&self) -> Subspace {
        let n = self.dim;
        let mut system = Matrix::zeros(n * n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for m in 0..n {
                    let row = (i * n + j) * n + m;
                    // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], component m
                    for k in 0..n {
                        let c = self.constant(i, j, k);
                        if !c.is_zero() {
                            add_to(&mut system, row, m * n + k, c);
                        }
                        let c = self.constant(k, j, m);
                        if !c.is_zero() {
                            add_to(&mut system, row, k * n + i, &-c);
                        }
                        let c = self.constant(i, k, m);
                        if !c.is_zero() {
                            add_to(&mut system, row, k * n + j, &-c);
                        }
                    }
                }
            }
        }
        let der = system.nullspace();
        debug_assert!(self.is_closed_under_commutator(&der));
        der
    }

    /// Checks that a subspace of the flattened operator space is closed under
    /// the operator commutator.
    pub fn is_closed_under_commutator(&self, ops: &Subspace) -> bool {
        let mats: Vec<Matrix> = ops.basis_vectors().iter().map(|v| self.operator_from_flat(v)).collect();
        mats.iter().all(|a| {
            mats.iter()
                .all(|b| ops.holds(a.commutator(b).entries()))
        })
    }

    /// Inverse of the row-major flattening used by [`Self::derivations`].
    pub fn operator_from_flat(&self, flat: &[Rational]) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |m, k| flat[m * n + k].clone())
    }

    pub fn is_derivation(&self, d: &Matrix) -> Result<bool> {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if d.rows() != n { d.rows() } else { d.cols() },
            });
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = d.apply(self.basis_bracket(i, j));
                let rhs = vector::add(&self.br(&d.column(i), &self.unit(j)), &self.br(&self.unit(i), &d.column(j)));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The same algebra in the basis `f_i = sum_k p[k][i] e_k` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<LeibnizAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("basis change matrix is singular".into()))?;
        let cols = p.column_vectors();
        let mut constants = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                constants.extend(inv.apply(&self.br(&cols[i], &cols[j])));
            }
        }
        Ok(LeibnizAlgebra {
            dim: n,
            names: self.names.clone(),
            constants,
        })
    }

    /// Direct sum; basis of `self` first. Labels of `other` get a `'` suffix
    /// on collision.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        let n = self.dim + other.dim;
        let mut names = self.names.clone();
        for name in &other.names {
            let mut label = name.clone();
            while names.contains(&label) {
                label.push('\'');
            }
            names.push(label);
        }
        let mut constants = vector::zero(n * n * n);
        for (i, j, k, c) in self.nonzero_constants() {
            constants[(i * n + j) * n + k] = c.clone();
        }
        let s = self.dim;
        for (i, j, k, c) in other.nonzero_constants() {
            constants[((i + s) * n + j + s) * n + k + s] = c.clone();
        }
        LeibnizAlgebra { dim: n, names, constants }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        check_names(&names)?;
        self.names = names;
        Ok(self)
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: len,
            });
        }
        Ok(())
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn check_names(names: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidAlgebra(format!("duplicate basis label {name:?}")));
        }
    }
    Ok(())
}

fn add_to(m: &mut Matrix, i: usize, j: usize, v: &Rational) {
    let cur = m.get(i, j) + v;
    m.set(i, j, cur);
}

impl MultOperator {
    pub fn determinant(&self) -> Rational {
        self.matrix.determinant()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.matrix.is_nilpotent()
    }
}
