//! Superalgebras of type `(m, n)` given by structure constants.
//!
//! The homogeneous basis is `e1..em` (even) followed by `f1..fn` (odd);
//! index `i < m` is `e_{i+1}` and index `m + j` is `f_{j+1}`. Products are
//! stored in four tensors:
//!
//! ```text
//! e_i e_j = sum_k alpha[i][j][k] e_k      f_i f_j = sum_k gamma[i][j][k] e_k
//! e_i f_j = sum_k beta[i][j][k] f_k       f_i e_j = sum_k beta_prime[i][j][k] f_k
//! ```

mod checks;
mod family;
pub mod grassmann;
pub mod identities;
mod powers;
pub mod spectrum;

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Field, RatFun, Scalar};
use crate::linear::Matrix;

pub use checks::{IdentityViolation, SupercommutativityViolation, TensorName};
pub use family::ParamFamily;
pub use powers::PowerDims;

/// Parity of a homogeneous element: 0 even, 1 odd.
pub type Parity = u8;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<F> {
    dims: [usize; 3],
    data: Vec<F>,
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(a: usize, b: usize, c: usize) -> Self {
        Tensor3 {
            dims: [a, b, c],
            data: vec![F::zero(); a * b * c],
        }
    }
}

impl<F> Tensor3<F> {
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    pub fn values(&self) -> &[F] {
        &self.data
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Tensor3<G> {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Tensor3<G>> {
        Ok(Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// All `(i, j, k, value)` entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> {
        let [_, b, c] = self.dims;
        self.data
            .iter()
            .enumerate()
            .map(move |(o, v)| (o / (b * c), (o / c) % b, o % c, v))
    }
}

/// A superalgebra of type `(m, n)` over the field `F`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperAlgebra<F = Scalar> {
    m: usize,
    n: usize,
    pub alpha: Tensor3<F>,
    pub beta: Tensor3<F>,
    pub beta_prime: Tensor3<F>,
    pub gamma: Tensor3<F>,
}

/// An element `x = x_0 + x_1` split into even and odd coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement<F = Scalar> {
    pub even: Vec<F>,
    pub odd: Vec<F>,
}

impl<F: Field> GradedElement<F> {
    pub fn zero(m: usize, n: usize) -> Self {
        GradedElement {
            even: vec![F::zero(); m],
            odd: vec![F::zero(); n],
        }
    }

    /// The basis element with flat index `idx` in an `(m, n)` algebra.
    pub fn basis(m: usize, n: usize, idx: usize) -> Self {
        let mut x = Self::zero(m, n);
        if idx < m {
            x.even[idx] = F::one();
        } else {
            x.odd[idx - m] = F::one();
        }
        x
    }

    pub fn from_flat(m: usize, v: &[F]) -> Self {
        GradedElement {
            even: v[..m].to_vec(),
            odd: v[m..].to_vec(),
        }
    }

    pub fn to_flat(&self) -> Vec<F> {
        self.even.iter().chain(&self.odd).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.even.iter().chain(&self.odd).all(Field::is_zero)
    }

    /// Homogeneous iff at most one of the two parts is nonzero.
    pub fn is_homogeneous(&self) -> bool {
        self.even.iter().all(Field::is_zero) || self.odd.iter().all(Field::is_zero)
    }
}

impl<F: Field> SuperAlgebra<F> {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperAlgebra {
            m,
            n,
            alpha: Tensor3::zeros(m, m, m),
            beta: Tensor3::zeros(m, n, n),
            beta_prime: Tensor3::zeros(n, m, n),
            gamma: Tensor3::zeros(n, n, m),
        }
    }

    pub fn from_tensors(
        alpha: Tensor3<F>,
        beta: Tensor3<F>,
        beta_prime: Tensor3<F>,
        gamma: Tensor3<F>,
    ) -> Result<Self> {
        let m = alpha.dims[0];
        let n = beta.dims[1];
        let ok = alpha.dims == [m, m, m]
            && beta.dims == [m, n, n]
            && beta_prime.dims == [n, m, n]
            && gamma.dims == [n, n, m];
        if !ok {
            return Err(Error::DimensionMismatch(format!(
                "tensor shapes {:?} {:?} {:?} {:?} do not describe a type ({m},{n}) superalgebra",
                alpha.dims, beta.dims, beta_prime.dims, gamma.dims
            )));
        }
        Ok(SuperAlgebra {
            m,
            n,
            alpha,
            beta,
            beta_prime,
            gamma,
        })
    }

    pub fn even_dim(&self) -> usize {
        self.m
    }

    pub fn odd_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn parity(&self, idx: usize) -> Parity {
        u8::from(idx >= self.m)
    }

    pub fn basis_name(&self, idx: usize) -> String {
        if idx < self.m {
            format!("e{}", idx + 1)
        } else {
            format!("f{}", idx - self.m + 1)
        }
    }

    /// Product of two basis elements as a flat coordinate vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<F> {
        let (m, n) = (self.m, self.n);
        let mut out = vec![F::zero(); m + n];
        match (i < m, j < m) {
            (true, true) => {
                for k in 0..m {
                    out[k] = self.alpha.get(i, j, k).clone();
                }
            }
            (true, false) => {
                for k in 0..n {
                    out[m + k] = self.beta.get(i, j - m, k).clone();
                }
            }
            (false, true) => {
                for k in 0..n {
                    out[m + k] = self.beta_prime.get(i - m, j, k).clone();
                }
            }
            (false, false) => {
                for k in 0..m {
                    out[k] = self.gamma.get(i - m, j - m, k).clone();
                }
            }
        }
        out
    }

    /// Set the product of two basis elements (one ordered pair only).
    pub fn set_product(&mut self, i: usize, j: usize, value: &[F]) -> Result<()> {
        let (m, n) = (self.m, self.n);
        if i >= m + n || j >= m + n || value.len() != m + n {
            return Err(Error::DimensionMismatch(format!(
                "product ({i},{j}) with value of length {} in a ({m},{n}) algebra",
                value.len()
            )));
        }
        let target_parity = self.parity(i) ^ self.parity(j);
        for (k, v) in value.iter().enumerate() {
            if self.parity(k) != target_parity && !v.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "{} * {} must be {}",
                    self.basis_name(i),
                    self.basis_name(j),
                    if target_parity == 0 { "even" } else { "odd" }
                )));
            }
        }
        match (i < m, j < m) {
            (true, true) => (0..m).for_each(|k| self.alpha.set(i, j, k, value[k].clone())),
            (true, false) => (0..n).for_each(|k| self.beta.set(i, j - m, k, value[m + k].clone())),
            (false, true) => {
                (0..n).for_each(|k| self.beta_prime.set(i - m, j, k, value[m + k].clone()))
            }
            (false, false) => {
                (0..m).for_each(|k| self.gamma.set(i - m, j - m, k, value[k].clone()))
            }
        }
        Ok(())
    }

    /// Set `b_i b_j` and complete `b_j b_i` by the supercommutativity sign rule.
    pub fn set_supercommutative(&mut self, i: usize, j: usize, value: &[F]) -> Result<()> {
        let sign_odd = self.parity(i) == 1 && self.parity(j) == 1;
        if i == j && sign_odd && value.iter().any(|v| !v.is_zero()) {
            return Err(Error::InvalidArgument(format!(
                "{0} * {0} must vanish in a supercommutative algebra",
                self.basis_name(i)
            )));
        }
        self.set_product(i, j, value)?;
        let mirrored: Vec<F> = if sign_odd {
            value.iter().map(|v| -v.clone()).collect()
        } else {
            value.to_vec()
        };
        self.set_product(j, i, &mirrored)
    }

    /// Table of all basis products, `table[i][j] = b_i b_j`.
    pub fn product_table(&self) -> Vec<Vec<Vec<F>>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| self.mul_basis(i, j)).collect())
            .collect()
    }

    /// Bilinear product of two flat coordinate vectors.
    pub fn mul_flat(&self, x: &[F], y: &[F]) -> Vec<F> {
        mul_with_table(&self.product_table(), x, y)
    }

    /// Product of graded elements, extended bilinearly from the basis.
    pub fn multiply(&self, x: &GradedElement<F>, y: &GradedElement<F>) -> Result<GradedElement<F>> {
        let ok = x.even.len() == self.m
            && y.even.len() == self.m
            && x.odd.len() == self.n
            && y.odd.len() == self.n;
        if !ok {
            return Err(Error::DimensionMismatch(format!(
                "elements do not belong to a ({},{}) algebra",
                self.m, self.n
            )));
        }
        let v = self.mul_flat(&x.to_flat(), &y.to_flat());
        Ok(GradedElement::from_flat(self.m, &v))
    }

    /// The even part `A_0` as an algebra of type `(m, 0)`.
    pub fn even_part(&self) -> SuperAlgebra<F> {
        let mut out = SuperAlgebra::zero(self.m, 0);
        out.alpha = self.alpha.clone();
        out
    }

    /// Keep only the odd-odd products (constants `(0, 0, 0, gamma)`).
    pub fn ab(&self) -> SuperAlgebra<F> {
        let mut out = SuperAlgebra::zero(self.m, self.n);
        out.gamma = self.gamma.clone();
        out
    }

    /// Drop the odd-odd products (constants `(alpha, beta, beta', 0)`).
    pub fn forget(&self) -> SuperAlgebra<F> {
        let mut out = self.clone();
        out.gamma = Tensor3::zeros(self.n, self.n, self.m);
        out
    }

    pub fn is_zero(&self) -> bool {
        [&self.alpha, &self.beta, &self.beta_prime, &self.gamma]
            .iter()
            .all(|t| t.data.iter().all(Field::is_zero))
    }

    /// Operator of left multiplication by `e_i` on the odd part, as an
    /// `n x n` matrix acting on coordinate columns.
    pub fn odd_action(&self, i: usize) -> Matrix<F> {
        let mut op = Matrix::zeros(self.n, self.n);
        for j in 0..self.n {
            for k in 0..self.n {
                op[(k, j)] = self.beta.get(i, j, k).clone();
            }
        }
        op
    }

    /// Whether every even basis element acts on the odd part as a scalar
    /// multiple of the identity. By linearity this then holds for every
    /// even element.
    pub fn scalar_odd_action(&self) -> bool {
        (0..self.m).all(|i| {
            let op = self.odd_action(i);
            let lambda = if self.n > 0 { op[(0, 0)].clone() } else { F::zero() };
            (0..self.n).all(|r| {
                (0..self.n).all(|c| {
                    if r == c {
                        op[(r, c)] == lambda
                    } else {
                        op[(r, c)].is_zero()
                    }
                })
            })
        })
    }

    /// Structure constants after the even change of basis
    /// `E_j = sum_i even[i][j] e_i`, `F_j = sum_i odd[i][j] f_i`.
    pub fn transform(&self, even: &Matrix<F>, odd: &Matrix<F>) -> Result<SuperAlgebra<F>> {
        let (m, n) = (self.m, self.n);
        if even.rows() != m || even.cols() != m || odd.rows() != n || odd.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "basis change of shape {}x{} / {}x{} for a ({m},{n}) algebra",
                even.rows(),
                even.cols(),
                odd.rows(),
                odd.cols()
            )));
        }
        let even_inv = even.inverse().ok_or(Error::CurveNotInGroup)?;
        let odd_inv = odd.inverse().ok_or(Error::CurveNotInGroup)?;
        let alpha = conjugate(&self.alpha, even, even, &even_inv);
        let beta = conjugate(&self.beta, even, odd, &odd_inv);
        let beta_prime = conjugate(&self.beta_prime, odd, even, &odd_inv);
        let gamma = conjugate(&self.gamma, odd, odd, &even_inv);
        SuperAlgebra::from_tensors(alpha, beta, beta_prime, gamma)
    }

    /// Apply `f` to every structure constant.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> SuperAlgebra<G> {
        SuperAlgebra {
            m: self.m,
            n: self.n,
            alpha: self.alpha.map(&f),
            beta: self.beta.map(&f),
            beta_prime: self.beta_prime.map(&f),
            gamma: self.gamma.map(&f),
        }
    }

    pub fn try_map_field<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<SuperAlgebra<G>> {
        Ok(SuperAlgebra {
            m: self.m,
            n: self.n,
            alpha: self.alpha.try_map(&f)?,
            beta: self.beta.try_map(&f)?,
            beta_prime: self.beta_prime.try_map(&f)?,
            gamma: self.gamma.try_map(&f)?,
        })
    }

    /// Every structure constant labelled in the `alpha[i,j,k]` style.
    pub fn labelled_constants(&self) -> Vec<(String, &F)> {
        let mut out = Vec::new();
        for (name, t) in [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("beta'", &self.beta_prime),
            ("gamma", &self.gamma),
        ] {
            for (i, j, k, v) in t.entries() {
                out.push((format!("{name}[{},{},{}]", i + 1, j + 1, k + 1), v));
            }
        }
        out
    }

    /// Nonzero products `b_i * b_j` with `i <= j`, formatted like `e1*f1 = 1/2 f1`.
    pub fn table_lines(&self) -> Vec<String> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i..d {
                let v = self.mul_basis(i, j);
                if v.iter().all(Field::is_zero) {
                    continue;
                }
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        if c.is_one() {
                            self.basis_name(k)
                        } else {
                            format!("({c}) {}", self.basis_name(k))
                        }
                    })
                    .collect();
                out.push(format!(
                    "{}*{} = {}",
                    self.basis_name(i),
                    self.basis_name(j),
                    terms.join(" + ")
                ));
            }
        }
        out
    }
}

impl SuperAlgebra<Scalar> {
    /// View the algebra over `Q(t)` with constant entries.
    pub fn to_ratfun(&self) -> SuperAlgebra<RatFun> {
        self.map_field(RatFun::from_scalar)
    }
}

pub(crate) fn mul_with_table<F: Field>(table: &[Vec<Vec<F>>], x: &[F], y: &[F]) -> Vec<F> {
    let d = x.len();
    let mut out = vec![F::zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi.clone() * yj;
            for (k, t) in table[i][j].iter().enumerate() {
                if !t.is_zero() {
                    out[k] = out[k].clone() + &(c.clone() * t);
                }
            }
        }
    }
    out
}

/// New constants `T'[i][j][k] = sum_{a,b,c} L[a][i] R[b][j] T[a][b][c] Inv[k][c]`.
fn conjugate<F: Field>(t: &Tensor3<F>, left: &Matrix<F>, right: &Matrix<F>, out_inv: &Matrix<F>) -> Tensor3<F> {
    let [da, db, dc] = t.dims;
    let mut out = Tensor3::zeros(da, db, dc);
    for i in 0..da {
        for j in 0..db {
            let mut img = vec![F::zero(); dc];
            for a in 0..da {
                let l = &left[(a, i)];
                if l.is_zero() {
                    continue;
                }
                for b in 0..db {
                    let r = &right[(b, j)];
                    if r.is_zero() {
                        continue;
                    }
                    let w = l.clone() * r;
                    for (c, slot) in img.iter_mut().enumerate() {
                        let v = t.get(a, b, c);
                        if !v.is_zero() {
                            *slot = slot.clone() + &(w.clone() * v);
                        }
                    }
                }
            }
            let new = out_inv.mul_vec(&img);
            for (k, v) in new.into_iter().enumerate() {
                out.set(i, j, k, v);
            }
        }
    }
    out
}

impl<F: Field> fmt::Display for SuperAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.table_lines();
        if lines.is_empty() {
            write!(f, "zero superalgebra of type ({},{})", self.m, self.n)
        } else {
            f.write_str(&lines.join(", "))
        }
    }
}

impl<F: Field> fmt::Debug for SuperAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra({},{}) {{ {} }}", self.m, self.n, self)
    }
}
