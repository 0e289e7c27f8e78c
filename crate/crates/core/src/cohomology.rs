//! Second cohomology `H^2(J, J)` with coefficients in the algebra itself.
//!
//! A cochain is a bilinear map `h`, stored in ordered-pair coordinates:
//! coordinate `(i*d + j)*d + k` is the `b_k` component of `h(b_i, b_j)`.
//! Cochains are supersymmetric, `h(a,b) = (-1)^{|a||b|} h(b,a)`. The cocycle
//! condition is
//!
//! ```text
//! F(a,b,c,d) + s1 F(a,d,c,b) + s2 F(b,d,c,a) = G(a,b,c,d) + s3 G(a,c,b,d) + s4 G(a,d,b,c)
//! F(a,b,c,d) = h((ab)c, d) + h(ab, c)d + (h(a,b)c)d
//! G(a,b,c,d) = h(ab, cd) + h(a,b)(cd) + (ab)h(c,d)
//! ```
//!
//! with `s1 = (-1)^{|b|(|c|+|d|)+|c||d|}`, `s2 = (-1)^{|a|(|b|+|c|+|d|)+|c||d|}`,
//! `s3 = (-1)^{|b||c|}`, `s4 = (-1)^{|d|(|c|+|b|)}`. Coboundaries are
//! `(dmu)(a,b) = a mu(b) + mu(a) b - mu(ab)`.

use serde::Serialize;

use crate::exact::Field;
use crate::linear::{span_basis, Echelon, Matrix};
use crate::superalgebra::{mul_with_table, SuperAlgebra};

/// A subspace of cochains given by a basis in ordered-pair coordinates.
#[derive(Clone, Debug)]
pub struct CochainSpace<F> {
    pub dim: usize,
    pub basis: Vec<Vec<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub algebra: String,
    #[serde(rename = "dimZ2")]
    pub dim_z2: usize,
    #[serde(rename = "dimB2")]
    pub dim_b2: usize,
    #[serde(rename = "dimH2")]
    pub dim_h2: usize,
    #[serde(rename = "dimZ2even")]
    pub dim_z2_even: usize,
    #[serde(rename = "dimB2even")]
    pub dim_b2_even: usize,
    #[serde(rename = "dimH2even")]
    pub dim_h2_even: usize,
    /// `H^2 = 0`, which implies rigidity.
    #[serde(rename = "rigidByH2")]
    pub h2_vanishes: bool,
    /// `(H^2)_0 = 0`, which also implies rigidity.
    #[serde(rename = "rigidByH2even")]
    pub h2_even_vanishes: bool,
}

/// Index of the `b_k` component of `h(b_i, b_j)`.
pub fn cochain_index(d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * d + j) * d + k
}

/// A vector-valued expression linear in the cochain: `rows[k]` holds the
/// coefficients of the `b_k` component.
type LinVec<F> = Vec<Vec<F>>;

struct Builder<'a, F> {
    table: &'a [Vec<Vec<F>>],
    d: usize,
}

impl<F: Field> Builder<'_, F> {
    fn unknowns(&self) -> usize {
        self.d * self.d * self.d
    }

    fn zero(&self) -> LinVec<F> {
        vec![vec![F::zero(); self.unknowns()]; self.d]
    }

    fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        mul_with_table(self.table, x, y)
    }

    fn unit(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.d];
        v[i] = F::one();
        v
    }

    /// `h(x, y)` for arbitrary vectors.
    fn h(&self, x: &[F], y: &[F]) -> LinVec<F> {
        let mut out = self.zero();
        for (l, xl) in x.iter().enumerate() {
            if xl.is_zero() {
                continue;
            }
            for (m, ym) in y.iter().enumerate() {
                if ym.is_zero() {
                    continue;
                }
                let c = xl.clone() * ym;
                for (k, row) in out.iter_mut().enumerate() {
                    row[cochain_index(self.d, l, m, k)] = c.clone();
                }
            }
        }
        out
    }

    /// `v * y` where `v = sum_p lv[p] b_p`.
    fn right_mul(&self, lv: &LinVec<F>, y: &[F]) -> LinVec<F> {
        let mut out = self.zero();
        for (p, coeffs) in lv.iter().enumerate() {
            let by = self.mul(&self.unit(p), y);
            for (k, f) in by.iter().enumerate() {
                if !f.is_zero() {
                    add_scaled(&mut out[k], coeffs, f);
                }
            }
        }
        out
    }

    /// `x * v` where `v = sum_p lv[p] b_p`.
    fn left_mul(&self, x: &[F], lv: &LinVec<F>) -> LinVec<F> {
        let mut out = self.zero();
        for (p, coeffs) in lv.iter().enumerate() {
            let xb = self.mul(x, &self.unit(p));
            for (k, f) in xb.iter().enumerate() {
                if !f.is_zero() {
                    add_scaled(&mut out[k], coeffs, f);
                }
            }
        }
        out
    }

    fn f_term(&self, a: usize, b: usize, c: usize, d: usize) -> LinVec<F> {
        let t = self.table;
        let ab = &t[a][b];
        let abc = self.mul(ab, &self.unit(c));
        let mut out = self.h(&abc, &self.unit(d));
        let h_ab_c = self.h(ab, &self.unit(c));
        add_lin(&mut out, &self.right_mul(&h_ab_c, &self.unit(d)), &F::one());
        let h_a_b = self.h(&self.unit(a), &self.unit(b));
        let hc = self.right_mul(&h_a_b, &self.unit(c));
        add_lin(&mut out, &self.right_mul(&hc, &self.unit(d)), &F::one());
        out
    }

    fn g_term(&self, a: usize, b: usize, c: usize, d: usize) -> LinVec<F> {
        let t = self.table;
        let (ab, cd) = (&t[a][b], &t[c][d]);
        let mut out = self.h(ab, cd);
        let h_a_b = self.h(&self.unit(a), &self.unit(b));
        add_lin(&mut out, &self.right_mul(&h_a_b, cd), &F::one());
        let h_c_d = self.h(&self.unit(c), &self.unit(d));
        add_lin(&mut out, &self.left_mul(ab, &h_c_d), &F::one());
        out
    }
}

fn add_scaled<F: Field>(acc: &mut [F], v: &[F], s: &F) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + &(x.clone() * s);
        }
    }
}

fn add_lin<F: Field>(acc: &mut LinVec<F>, v: &LinVec<F>, s: &F) {
    for (ra, rv) in acc.iter_mut().zip(v) {
        add_scaled(ra, rv, s);
    }
}

fn sign<F: Field>(exponent: u8) -> F {
    if exponent.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

/// Rows expressing supersymmetry, plus (for the even variant) vanishing of
/// the components of wrong parity.
fn shape_constraints<F: Field>(a: &SuperAlgebra<F>, even_only: bool) -> Vec<Vec<F>> {
    let d = a.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let odd_pair = a.parity(i) == 1 && a.parity(j) == 1;
            for k in 0..d {
                let mut row = vec![F::zero(); d * d * d];
                row[cochain_index(d, i, j, k)] = F::one();
                let other = cochain_index(d, j, i, k);
                let s = if odd_pair { F::one() } else { -F::one() };
                row[other] = row[other].clone() + &s;
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
                if even_only && a.parity(k) != a.parity(i) ^ a.parity(j) {
                    let mut row = vec![F::zero(); d * d * d];
                    row[cochain_index(d, i, j, k)] = F::one();
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// The full linear system cutting out 2-cocycles.
fn cocycle_system<F: Field>(a: &SuperAlgebra<F>, even_only: bool) -> Matrix<F> {
    let d = a.dim();
    let table = a.product_table();
    let b = Builder { table: &table, d };
    let p = |i: usize| a.parity(i);
    let mut m = Matrix::zeros(0, b.unknowns());
    for row in shape_constraints(a, even_only) {
        m.push_row(row);
    }
    for w in 0..d {
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let (pa, pb, pc, pd) = (p(w), p(x), p(y), p(z));
                    let s1: F = sign(pb * (pc + pd) + pc * pd);
                    let s2: F = sign(pa * (pb + pc + pd) + pc * pd);
                    let s3: F = sign(pb * pc);
                    let s4: F = sign(pd * (pc + pb));
                    let mut eq = b.f_term(w, x, y, z);
                    add_lin(&mut eq, &b.f_term(w, z, y, x), &s1);
                    add_lin(&mut eq, &b.f_term(x, z, y, w), &s2);
                    add_lin(&mut eq, &b.g_term(w, x, y, z), &-F::one());
                    add_lin(&mut eq, &b.g_term(w, y, x, z), &-s3);
                    add_lin(&mut eq, &b.g_term(w, z, x, y), &-s4);
                    for row in eq {
                        if row.iter().any(|c| !c.is_zero()) {
                            m.push_row(row);
                        }
                    }
                }
            }
        }
    }
    m
}

/// Supersymmetric 2-cocycles; with `even_only`, those preserving parity.
pub fn cocycle_space<F: Field>(a: &SuperAlgebra<F>, even_only: bool) -> CochainSpace<F> {
    let basis = cocycle_system(a, even_only).nullspace();
    CochainSpace { dim: basis.len(), basis }
}

/// The cochain `dmu` for a linear map `mu` given as a matrix whose column
/// `j` is `mu(b_j)`.
pub fn coboundary_of<F: Field>(a: &SuperAlgebra<F>, mu: &Matrix<F>) -> Vec<F> {
    let d = a.dim();
    let table = a.product_table();
    let unit = |i: usize| {
        let mut v = vec![F::zero(); d];
        v[i] = F::one();
        v
    };
    let mut out = vec![F::zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            let t1 = mul_with_table(&table, &unit(i), &mu.column(j));
            let t2 = mul_with_table(&table, &mu.column(i), &unit(j));
            let t3 = mu.mul_vec(&table[i][j]);
            for k in 0..d {
                out[cochain_index(d, i, j, k)] = t1[k].clone() + &t2[k] - &t3[k];
            }
        }
    }
    out
}

/// Coboundaries `dmu` that are 2-cocycles. In the full variant `mu` ranges
/// over all linear maps; in the even variant `mu` is block diagonal. For an
/// odd part of `mu` the unsigned formula for `dmu` need not satisfy the
/// cocycle condition, so the image is cut down to its supersymmetric
/// cocycles.
pub fn coboundary_space<F: Field>(a: &SuperAlgebra<F>, even_only: bool) -> CochainSpace<F> {
    let d = a.dim();
    let mus: Vec<(usize, usize)> = (0..d)
        .flat_map(|r| (0..d).map(move |c| (r, c)))
        .filter(|&(r, c)| !even_only || a.parity(r) == a.parity(c))
        .collect();
    let images: Vec<Vec<F>> = mus
        .iter()
        .map(|&(r, c)| {
            let mut mu = Matrix::zeros(d, d);
            mu[(r, c)] = F::one();
            coboundary_of(a, &mu)
        })
        .collect();
    let constraints = cocycle_system(a, even_only);
    let mut sys = Matrix::zeros(0, mus.len());
    for row in constraints.row_vecs() {
        sys.push_row(images.iter().map(|img| crate::linear::dot(&row, img)).collect());
    }
    let combos = sys.nullspace();
    let vectors: Vec<Vec<F>> = combos
        .iter()
        .map(|coeffs| {
            let mut v = vec![F::zero(); d * d * d];
            for (c, img) in coeffs.iter().zip(&images) {
                if !c.is_zero() {
                    add_scaled(&mut v, img, c);
                }
            }
            v
        })
        .collect();
    let basis = span_basis(d * d * d, &vectors).expect("uniform length");
    CochainSpace { dim: basis.len(), basis }
}

fn echelon_of<F: Field>(d: usize, space: &CochainSpace<F>) -> Echelon<F> {
    Matrix::from_rows(d * d * d, space.basis.clone())
        .expect("uniform length")
        .echelon()
}

/// Whether every basis vector of `sub` lies in `space`.
pub fn contained_in<F: Field>(d: usize, sub: &CochainSpace<F>, space: &CochainSpace<F>) -> bool {
    let ech = echelon_of(d, space);
    sub.basis.iter().all(|v| ech.contains(v))
}

/// Whether a cochain lies in the given space.
pub fn in_space<F: Field>(d: usize, v: &[F], space: &CochainSpace<F>) -> bool {
    echelon_of(d, space).contains(v)
}

pub fn h2_report<F: Field>(name: &str, a: &SuperAlgebra<F>) -> CohomologyReport {
    let z = cocycle_space(a, false);
    let b = coboundary_space(a, false);
    let ze = cocycle_space(a, true);
    let be = coboundary_space(a, true);
    let dim_h2 = z.dim - b.dim;
    let dim_h2_even = ze.dim - be.dim;
    CohomologyReport {
        algebra: name.to_string(),
        dim_z2: z.dim,
        dim_b2: b.dim,
        dim_h2,
        dim_z2_even: ze.dim,
        dim_b2_even: be.dim,
        dim_h2_even,
        h2_vanishes: dim_h2 == 0,
        h2_even_vanishes: dim_h2_even == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    #[test]
    fn zero_algebra_cocycles() {
        let z = SuperAlgebra::<Scalar>::zero(2, 2);
        // every supersymmetric cochain is a cocycle: 3*4 + 4*4 + 1*4
        assert_eq!(cocycle_space(&z, false).dim, 32);
        assert_eq!(cocycle_space(&z, true).dim, 16);
        assert_eq!(coboundary_space(&z, false).dim, 0);
    }

    #[test]
    fn product_is_a_cocycle() {
        // h = multiplication itself is dmu for mu = identity
        let mut a = SuperAlgebra::<Scalar>::zero(2, 2);
        let one = Scalar::from(1);
        let half = Scalar::new(1, 2);
        let z = Scalar::zero();
        a.set_supercommutative(0, 0, &[one.clone(), z.clone(), z.clone(), z.clone()]).unwrap();
        a.set_supercommutative(1, 1, &[z.clone(), one.clone(), z.clone(), z.clone()]).unwrap();
        a.set_supercommutative(0, 2, &[z.clone(), z.clone(), half.clone(), z.clone()]).unwrap();
        a.set_supercommutative(0, 3, &[z.clone(), z.clone(), z.clone(), half.clone()]).unwrap();
        a.set_supercommutative(2, 3, &[one.clone(), z.clone(), z.clone(), z.clone()]).unwrap();
        let d = a.dim();
        let h = coboundary_of(&a, &Matrix::identity(d));
        let zs = cocycle_space(&a, false);
        assert!(in_space(d, &h, &zs));
        let bs = coboundary_space(&a, false);
        assert!(contained_in(d, &bs, &zs));
    }
}
