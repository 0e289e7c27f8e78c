//! Even derivations. In characteristic zero their dimension equals the
//! dimension of the automorphism group.

use crate::exact::Field;
use crate::linear::Matrix;
use crate::superalgebra::SuperAlgebra;

/// Even derivations of an algebra, each stored as a block-diagonal
/// `(m+n) x (m+n)` matrix whose column `j` is `D(b_j)`.
#[derive(Clone, Debug)]
pub struct DerivationSpace<F: Field> {
    pub dim: usize,
    pub basis: Vec<Matrix<F>>,
}

/// Positions of the unknown entries `(row, col)` of a block-diagonal map,
/// or of any map when `graded` is false.
fn unknowns<F: Field>(a: &SuperAlgebra<F>, graded: bool) -> Vec<(usize, usize)> {
    let d = a.dim();
    let mut out = Vec::new();
    for r in 0..d {
        for c in 0..d {
            if !graded || a.parity(r) == a.parity(c) {
                out.push((r, c));
            }
        }
    }
    out
}

/// The Leibniz system `D(b_i b_j) - D(b_i) b_j - b_i D(b_j) = 0` over all
/// basis pairs, one row per pair and output coordinate.
fn leibniz_system<F: Field>(a: &SuperAlgebra<F>, graded: bool) -> (Matrix<F>, Vec<(usize, usize)>) {
    let d = a.dim();
    let vars = unknowns(a, graded);
    let index = |r: usize, c: usize| vars.iter().position(|&v| v == (r, c));
    let table = a.product_table();
    let mut system = Matrix::zeros(0, vars.len());
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut row = vec![F::zero(); vars.len()];
                let mut add = |slot: Option<usize>, v: &F, negate: bool| {
                    if let Some(s) = slot {
                        if !v.is_zero() {
                            row[s] = if negate { row[s].clone() - v } else { row[s].clone() + v };
                        }
                    }
                };
                // D(b_i b_j)_k = sum_l D[k][l] (b_i b_j)_l
                for (l, v) in table[i][j].iter().enumerate() {
                    add(index(k, l), v, false);
                }
                // (D(b_i) b_j)_k = sum_r D[r][i] (b_r b_j)_k
                for r in 0..d {
                    add(index(r, i), &table[r][j][k], true);
                }
                // (b_i D(b_j))_k = sum_r D[r][j] (b_i b_r)_k
                for r in 0..d {
                    add(index(r, j), &table[i][r][k], true);
                }
                if row.iter().any(|c| !c.is_zero()) {
                    system.push_row(row);
                }
            }
        }
    }
    (system, vars)
}

pub fn even_derivations<F: Field>(a: &SuperAlgebra<F>) -> DerivationSpace<F> {
    let (system, vars) = leibniz_system(a, true);
    let d = a.dim();
    let basis: Vec<Matrix<F>> = system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(d, d);
            for (&(r, c), x) in vars.iter().zip(v) {
                m[(r, c)] = x;
            }
            m
        })
        .collect();
    DerivationSpace { dim: basis.len(), basis }
}

/// Dimension of the even derivation algebra, equal to `dim Aut(A)`.
pub fn even_derivation_dim<F: Field>(a: &SuperAlgebra<F>) -> usize {
    let (system, vars) = leibniz_system(a, true);
    vars.len() - system.rank()
}

/// Dimension of the derivation algebra of `A` as an ordinary algebra,
/// grading ignored: every linear map is allowed.
pub fn ungraded_derivation_dim<F: Field>(a: &SuperAlgebra<F>) -> usize {
    let (system, vars) = leibniz_system(a, false);
    vars.len() - system.rank()
}

/// `dim G - dim Aut(A)` with `G = GL_m x GL_n`.
pub fn orbit_dim<F: Field>(a: &SuperAlgebra<F>) -> usize {
    let (m, n) = (a.even_dim(), a.odd_dim());
    m * m + n * n - even_derivation_dim(a)
}

/// Whether a linear map (columns = images of basis vectors) satisfies the
/// Leibniz rule on all basis pairs.
pub fn is_derivation<F: Field>(a: &SuperAlgebra<F>, map: &Matrix<F>) -> bool {
    let d = a.dim();
    let table = a.product_table();
    let image = |v: &[F]| map.mul_vec(v);
    for i in 0..d {
        for j in 0..d {
            let lhs = image(&table[i][j]);
            let di = map.column(i);
            let dj = map.column(j);
            let mut bj = vec![F::zero(); d];
            bj[j] = F::one();
            let mut bi = vec![F::zero(); d];
            bi[i] = F::one();
            let r1 = a.mul_flat(&di, &bj);
            let r2 = a.mul_flat(&bi, &dj);
            let rhs: Vec<F> = r1.into_iter().zip(r2).map(|(x, y)| x + &y).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
