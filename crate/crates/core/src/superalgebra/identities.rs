//! Multilinear graded polynomial identities of low degree.
//!
//! For a degree `k` and a number `j` of odd variables, the variables
//! `x1..xk` are homogeneous with the first `k - j` even and the rest odd.
//! In a supercommutative algebra every multilinear monomial equals, up to
//! sign, one of the commutative monomials below, so identities are the
//! linear relations among those monomials that vanish on all basis
//! assignments.

use std::collections::BTreeMap;
use std::fmt;

use super::{mul_with_table, SuperAlgebra};
use crate::exact::{Field, Scalar};
use crate::linear::{Echelon, Matrix};

pub const MAX_DEGREE: usize = 4;

/// A multilinear monomial in variables `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monomial {
    Pair(usize, usize),
    /// `(ab)c`
    Left3(usize, usize, usize),
    /// `((ab)c)d`
    Left4(usize, usize, usize, usize),
    /// `(ab)(cd)`
    Square(usize, usize, usize, usize),
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = |i: &usize| format!("x{}", i + 1);
        match self {
            Monomial::Pair(a, b) => write!(f, "{}{}", x(a), x(b)),
            Monomial::Left3(a, b, c) => write!(f, "({}{}){}", x(a), x(b), x(c)),
            Monomial::Left4(a, b, c, d) => write!(f, "(({}{}){}){}", x(a), x(b), x(c), x(d)),
            Monomial::Square(a, b, c, d) => write!(f, "({}{})({}{})", x(a), x(b), x(c), x(d)),
        }
    }
}

/// The commutative multilinear monomials of degree `k` (1, 3 and 15 of
/// them for `k = 2, 3, 4`).
pub fn monomials(k: usize) -> Vec<Monomial> {
    match k {
        2 => vec![Monomial::Pair(0, 1)],
        3 => vec![Monomial::Left3(0, 1, 2), Monomial::Left3(0, 2, 1), Monomial::Left3(1, 2, 0)],
        4 => {
            let mut out = Vec::new();
            for d in 0..4 {
                for c in 0..4 {
                    if c == d {
                        continue;
                    }
                    let rest: Vec<usize> = (0..4).filter(|&i| i != c && i != d).collect();
                    out.push(Monomial::Left4(rest[0], rest[1], c, d));
                }
            }
            out.push(Monomial::Square(0, 1, 2, 3));
            out.push(Monomial::Square(0, 2, 1, 3));
            out.push(Monomial::Square(0, 3, 1, 2));
            out
        }
        _ => panic!("monomials of degree {k} are not tabulated"),
    }
}

fn eval<F: Field>(table: &[Vec<Vec<F>>], mono: Monomial, vars: &[usize]) -> Vec<F> {
    let t = |i: usize, j: usize| table[vars[i]][vars[j]].clone();
    let unit = |i: usize| {
        let mut v = vec![F::zero(); table.len()];
        v[vars[i]] = F::one();
        v
    };
    match mono {
        Monomial::Pair(a, b) => t(a, b),
        Monomial::Left3(a, b, c) => mul_with_table(table, &t(a, b), &unit(c)),
        Monomial::Left4(a, b, c, d) => {
            let abc = mul_with_table(table, &t(a, b), &unit(c));
            mul_with_table(table, &abc, &unit(d))
        }
        Monomial::Square(a, b, c, d) => mul_with_table(table, &t(a, b), &t(c, d)),
    }
}

/// Evaluation rows: for every basis assignment and output coordinate, the
/// values of all monomials.
fn evaluation_rows(a: &SuperAlgebra<Scalar>, k: usize, odd: usize) -> Vec<Vec<Scalar>> {
    let table = a.product_table();
    let monos = monomials(k);
    let evens: Vec<usize> = (0..a.even_dim()).collect();
    let odds: Vec<usize> = (a.even_dim()..a.dim()).collect();
    let pools: Vec<&[usize]> = (0..k).map(|i| if i < k - odd { &evens[..] } else { &odds[..] }).collect();
    let mut rows = Vec::new();
    let mut vars = vec![0usize; k];
    let total: usize = pools.iter().map(|p| p.len()).product();
    for mut code in 0..total {
        for (slot, pool) in pools.iter().enumerate() {
            vars[slot] = pool[code % pool.len()];
            code /= pool.len();
        }
        let values: Vec<Vec<Scalar>> = monos.iter().map(|&m| eval(&table, m, &vars)).collect();
        for coord in 0..a.dim() {
            let row: Vec<Scalar> = values.iter().map(|v| v[coord].clone()).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

/// Row spaces of the evaluation maps, keyed by `(degree, odd variables)`.
/// The identities are the annihilator of each row space. Row spaces are
/// kept in reduced echelon form, so equality is equality of identity sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySignature {
    spaces: BTreeMap<(usize, usize), Echelon<Scalar>>,
}

impl IdentitySignature {
    pub fn of(a: &SuperAlgebra<Scalar>) -> Self {
        Self::of_all(std::slice::from_ref(a))
    }

    /// Identities common to all the given algebras.
    pub fn of_all(algebras: &[SuperAlgebra<Scalar>]) -> Self {
        let mut spaces = BTreeMap::new();
        for k in 2..=MAX_DEGREE {
            for odd in 0..=k {
                let rows: Vec<Vec<Scalar>> = algebras.iter().flat_map(|a| evaluation_rows(a, k, odd)).collect();
                let cols = monomials(k).len();
                let m = Matrix::from_rows(cols, rows).expect("rows have one entry per monomial");
                spaces.insert((k, odd), m.echelon());
            }
        }
        IdentitySignature { spaces }
    }

    /// Number of independent identities for `(degree, odd variables)`.
    pub fn identity_count(&self, k: usize, odd: usize) -> usize {
        self.spaces[&(k, odd)].matrix.cols() - self.spaces[&(k, odd)].rank()
    }

    /// A basis of the identities, as coefficient vectors over [`monomials`].
    pub fn identities(&self, k: usize, odd: usize) -> Vec<Vec<Scalar>> {
        self.spaces[&(k, odd)].nullspace()
    }

    /// The first `(degree, odd variables)` at which some identity of `self`
    /// fails in `other`, together with that identity. `None` means every
    /// tabulated identity of `self` also holds in `other`.
    pub fn first_failure_in(&self, other: &IdentitySignature) -> Option<((usize, usize), String)> {
        for (key, mine) in &self.spaces {
            let theirs = &other.spaces[key];
            if theirs.matrix.row_vecs().iter().all(|r| mine.contains(r)) {
                continue;
            }
            let witness = mine
                .nullspace()
                .into_iter()
                .find(|id| theirs.matrix.row_vecs().iter().any(|r| !crate::linear::dot(r, id).is_zero()))
                .expect("a separating identity exists when row spaces differ");
            return Some((*key, format_identity(key.0, key.1, &witness)));
        }
        None
    }
}

/// Render an identity like `(x1x2)x3 - (x2x3)x1 = 0 (odd x3)`.
pub fn format_identity(k: usize, odd: usize, coeffs: &[Scalar]) -> String {
    let mut out = String::new();
    for (mono, c) in monomials(k).iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs} "));
        }
        out.push_str(&mono.to_string());
    }
    if odd == 0 {
        return format!("{out} = 0");
    }
    let odd_vars: Vec<String> = (k - odd..k).map(|i| format!("x{}", i + 1)).collect();
    format!("{out} = 0 (odd {})", odd_vars.join(","))
}
