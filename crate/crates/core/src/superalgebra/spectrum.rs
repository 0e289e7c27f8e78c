//! Polynomial relations among the coefficients of the characteristic
//! polynomial of left multiplication `L_x`, as `x` runs over the algebra.
//!
//! A relation is a weighted-homogeneous polynomial in the coefficients
//! that vanishes for every `x`. Relations are preserved by the change of
//! basis and are closed conditions on the structure constants, so a
//! relation of `A` that fails in `B` rules out `A -> B`.

use std::collections::BTreeMap;

use super::{mul_with_table, SuperAlgebra};
use crate::exact::{Field, Scalar};
use crate::linear::{Echelon, Matrix};

/// Largest weight tabulated; coefficient `c_k` has weight `k`.
pub const MAX_WEIGHT: usize = 6;

/// Which multiplication operators are taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operators {
    /// `L_x` on the whole algebra for every `x`, grading ignored.
    Full,
    /// `L_x` for even `x`, as its two diagonal blocks on `A_0` and `A_1`.
    Even,
}

/// Coefficients `c_1..c_n` of `det(λ - M) = λ^n + c_1 λ^(n-1) + ... + c_n`,
/// by the Faddeev-LeVerrier recursion.
pub fn charpoly<F: Field>(m: &Matrix<F>) -> Vec<F> {
    let n = m.rows();
    let mut coeffs = Vec::with_capacity(n);
    let mut prev = Matrix::zeros(n, n);
    let mut c = F::one();
    for k in 1..=n {
        let mut mk = m.mul(&prev);
        for i in 0..n {
            mk[(i, i)] = mk[(i, i)].clone() + &c;
        }
        let amk = m.mul(&mk);
        let trace = (0..n).fold(F::zero(), |acc, i| acc + &amk[(i, i)]);
        c = -(trace * &F::from_i64(k as i64).inv().expect("characteristic zero"));
        coeffs.push(c.clone());
        prev = mk;
    }
    coeffs
}

/// Exponent vectors over coefficients of the given weights with total
/// weight `w`.
fn monomials(weights: &[usize], w: usize) -> Vec<Vec<usize>> {
    fn go(weights: &[usize], w: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match weights.split_first() {
            None => {
                if w == 0 {
                    out.push(acc.clone());
                }
            }
            Some((&first, rest)) => {
                for e in 0..=w / first {
                    acc.push(e);
                    go(rest, w - e * first, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(weights, w, &mut Vec::new(), &mut out);
    out
}

/// Nonnegative integer points with coordinate sum at most `w`. A
/// polynomial of degree at most `w` vanishing on them is zero.
fn grid(vars: usize, w: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let used: i64 = p.iter().sum();
                (0..=(w as i64 - used)).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn left_mult(table: &[Vec<Vec<Scalar>>], x: &[Scalar], cols: &[usize], rows: &[usize]) -> Matrix<Scalar> {
    let d = table.len();
    let mut flat = vec![Scalar::zero(); d];
    for (slot, v) in x.iter().enumerate() {
        flat[slot] = v.clone();
    }
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, &c) in cols.iter().enumerate() {
        let mut basis = vec![Scalar::zero(); d];
        basis[c] = Scalar::one();
        let image = mul_with_table(table, &flat, &basis);
        for (i, &r) in rows.iter().enumerate() {
            m[(i, j)] = image[r].clone();
        }
    }
    m
}

/// Relations among characteristic polynomial coefficients, up to
/// [`MAX_WEIGHT`]. For each weight the row space spanned by the monomial
/// values at sample points is stored in reduced echelon form; relations
/// are its annihilator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralRelations {
    names: Vec<String>,
    weights: Vec<usize>,
    spaces: BTreeMap<usize, Echelon<Scalar>>,
}

impl SpectralRelations {
    pub fn of(a: &SuperAlgebra<Scalar>, ops: Operators) -> Self {
        let (m, d) = (a.even_dim(), a.dim());
        let (vars, blocks): (usize, Vec<(Vec<usize>, &str)>) = match ops {
            Operators::Full => (d, vec![((0..d).collect(), "c")]),
            Operators::Even => (m, vec![((0..m).collect(), "a"), ((m..d).collect(), "b")]),
        };
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (idx, prefix) in &blocks {
            for k in 1..=idx.len() {
                names.push(format!("{prefix}{k}"));
                weights.push(k);
            }
        }
        let table = a.product_table();
        let values: Vec<Vec<Scalar>> = grid(vars, MAX_WEIGHT)
            .into_iter()
            .map(|p| {
                let x: Vec<Scalar> = p.into_iter().map(Scalar::from).collect();
                blocks
                    .iter()
                    .flat_map(|(idx, _)| charpoly(&left_mult(&table, &x, idx, idx)))
                    .collect()
            })
            .collect();
        let mut spaces = BTreeMap::new();
        for w in 1..=MAX_WEIGHT {
            let monos = monomials(&weights, w);
            let rows: Vec<Vec<Scalar>> = values
                .iter()
                .map(|v| monos.iter().map(|e| eval_monomial(v, e)).collect::<Vec<_>>())
                .filter(|r: &Vec<Scalar>| r.iter().any(|c| !c.is_zero()))
                .collect();
            let matrix = Matrix::from_rows(monos.len(), rows).expect("one value per monomial");
            spaces.insert(w, matrix.echelon());
        }
        SpectralRelations { names, weights, spaces }
    }

    /// Number of independent relations of weight `w`.
    pub fn relation_count(&self, w: usize) -> usize {
        self.spaces[&w].matrix.cols() - self.spaces[&w].rank()
    }

    /// Some relation of `self` that fails in `other`, rendered as a
    /// polynomial. Both sides must use the same operators on algebras of
    /// the same type.
    pub fn first_failure_in(&self, other: &SpectralRelations) -> Option<String> {
        for (w, mine) in &self.spaces {
            let theirs = &other.spaces[w];
            if theirs.matrix.row_vecs().iter().all(|r| mine.contains(r)) {
                continue;
            }
            let witness = mine
                .nullspace()
                .into_iter()
                .find(|rel| theirs.matrix.row_vecs().iter().any(|r| !crate::linear::dot(r, rel).is_zero()))
                .expect("a separating relation exists when row spaces differ");
            return Some(self.format(*w, &witness));
        }
        None
    }

    fn format(&self, w: usize, coeffs: &[Scalar]) -> String {
        let terms: Vec<String> = monomials(&self.weights, w)
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let factors: Vec<String> = e
                    .iter()
                    .zip(&self.names)
                    .filter(|(&k, _)| k > 0)
                    .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                    .collect();
                format!("({c}){}", factors.join("*"))
            })
            .collect();
        format!("{} = 0", terms.join(" + "))
    }
}

fn eval_monomial(values: &[Scalar], exps: &[usize]) -> Scalar {
    let mut acc = Scalar::one();
    for (v, &e) in values.iter().zip(exps) {
        for _ in 0..e {
            acc = acc * v;
        }
    }
    acc
}
