//! Dense exact linear algebra over any [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Echelon<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Build from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn push_row(&mut self, row: Vec<F>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + &(a.clone() * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    ///
    /// Pivots are chosen per column as the entry of least
    /// [`Field::pivot_weight`], which keeps intermediate sizes small.
    pub fn echelon(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by_key(|&i| m[(i, c)].pivot_weight())
            else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let delta = factor.clone() * &m[(r, j)];
                    m[(i, j)] = m[(i, j)].clone() - &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        self.echelon().nullspace()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = ech.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * &pivot;
            let inv = pivot.inv().expect("nonzero");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() * &inv;
                for j in c..n {
                    let delta = factor.clone() * &m[(c, j)];
                    m[(i, j)] = m[(i, j)].clone() - &delta;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let cols = self.matrix.cols;
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![F::zero(); cols];
                v[free] = F::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.matrix[(r, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Reduce `v` against the echelon rows; the result is zero iff `v` lies
    /// in the row space.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (j, x) in self.matrix.row(r).iter().enumerate().skip(p) {
                if !x.is_zero() {
                    out[j] = out[j].clone() - &(factor.clone() * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + &(x.clone() * y))
}

/// Dimension of the span of a list of equal-length vectors.
pub fn span_dim<F: Field>(vectors: &[Vec<F>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let m = Matrix::from_rows(first.len(), vectors.to_vec())?;
    Ok(m.rank())
}

/// A basis (echelon rows) of the span of the given vectors of length `len`.
pub fn span_basis<F: Field>(len: usize, vectors: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_rows(len, vectors.to_vec())?;
    Ok(m.echelon().matrix.row_vecs())
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: fmt::Display> fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Echelon")
            .field("matrix", &self.matrix)
            .field("pivots", &self.pivots)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{RatFun, Scalar};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Scalar>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Scalar>::zeros(3, 3).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::<Scalar>::identity(3).nullspace().is_empty());
        assert_eq!(Matrix::<Scalar>::zeros(2, 5).nullspace().len(), 5);
        let ns = m(&[&[1, 1]]).nullspace();
        assert_eq!(ns, vec![v(&[-1, 1])]);
    }

    #[test]
    fn span_dim_examples() {
        assert_eq!(span_dim(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap(), 2);
        assert_eq!(span_dim::<Scalar>(&[]).unwrap(), 0);
        assert_eq!(span_dim(&[v(&[2, 4]), v(&[1, 2])]).unwrap(), 1);
        assert!(span_dim(&[v(&[1, 0]), v(&[1])]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.determinant(), Scalar::one());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(m(&[&[1, 2], &[2, 4]]).determinant().is_zero());
    }

    #[test]
    fn works_over_rational_functions() {
        // [[1, t], [t, 1]] has determinant 1 - t^2 and full rank over Q(t).
        let t = RatFun::var();
        let a = Matrix::from_rows(2, vec![vec![RatFun::one(), t.clone()], vec![t.clone(), RatFun::one()]]).unwrap();
        assert_eq!(a.rank(), 2);
        let det = a.determinant();
        assert_eq!(det.to_string(), "1-t^2");
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<Scalar>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r).prop_map(move |rows| {
                Matrix::from_rows(
                    c,
                    rows.into_iter()
                        .map(|row| row.into_iter().map(Scalar::from).collect())
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix()) {
            let ns = a.nullspace();
            prop_assert_eq!(a.rank() + ns.len(), a.cols());
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(Field::is_zero));
            }
            prop_assert!(a.rank() <= a.rows().min(a.cols()));
        }

        #[test]
        fn rank_invariant_under_transpose(a in small_matrix()) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn echelon_contains_rows(a in small_matrix()) {
            let ech = a.echelon();
            for i in 0..a.rows() {
                prop_assert!(ech.contains(a.row(i)));
            }
        }
    }
}
