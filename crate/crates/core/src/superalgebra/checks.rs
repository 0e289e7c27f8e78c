use std::fmt;

use super::{mul_with_table, SuperAlgebra};
use crate::exact::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorName {
    Alpha,
    BetaPrime,
    Gamma,
}

impl fmt::Display for TensorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TensorName::Alpha => "alpha",
            TensorName::BetaPrime => "beta'",
            TensorName::Gamma => "gamma",
        })
    }
}

/// First index triple (zero-based) at which a supercommutativity relation fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupercommutativityViolation {
    pub tensor: TensorName,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for SupercommutativityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = (self.i + 1, self.j + 1, self.k + 1);
        match self.tensor {
            TensorName::Alpha => write!(f, "alpha[{i},{j},{k}] != alpha[{j},{i},{k}]"),
            TensorName::BetaPrime => write!(f, "beta'[{i},{j},{k}] != beta[{j},{i},{k}]"),
            TensorName::Gamma => write!(f, "gamma[{i},{j},{k}] != -gamma[{j},{i},{k}]"),
        }
    }
}

/// A basis tuple `(w, x, y, z)` (flat indices) with a nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation<F> {
    pub tuple: [usize; 4],
    pub residual: Vec<F>,
}

fn sign<F: Field>(odd: u8, v: Vec<F>) -> Vec<F> {
    if odd % 2 == 1 {
        v.into_iter().map(|c| -c).collect()
    } else {
        v
    }
}

fn axpy<F: Field>(acc: &mut [F], coeff_negative: bool, v: &[F]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if b.is_zero() {
            continue;
        }
        *a = if coeff_negative { a.clone() - b } else { a.clone() + b };
    }
}

impl<F: Field> SuperAlgebra<F> {
    pub fn check_supercommutativity(&self) -> Result<(), SupercommutativityViolation> {
        let (m, n) = (self.m, self.n);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if self.alpha.get(i, j, k) != self.alpha.get(j, i, k) {
                        return Err(SupercommutativityViolation { tensor: TensorName::Alpha, i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    if self.beta_prime.get(i, j, k) != self.beta.get(j, i, k) {
                        return Err(SupercommutativityViolation { tensor: TensorName::BetaPrime, i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    let lhs = self.gamma.get(i, j, k).clone();
                    let rhs = -self.gamma.get(j, i, k).clone();
                    if lhs != rhs {
                        return Err(SupercommutativityViolation { tensor: TensorName::Gamma, i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Jordan superidentity residual on a basis tuple `(w, x, y, z)`:
    ///
    /// ```text
    /// (wx)(yz) + (-1)^{|x||y|} (wy)(xz) + (-1)^{(|x|+|y|)|z|} (wz)(xy)
    ///   - (-1)^{|w||x|} x(w(yz)) - (-1)^{|y|(|w|+|x|)} y(w(xz))
    ///   - (-1)^{|z|(|w|+|x|+|y|)} z(w(xy))
    /// ```
    pub fn jordan_residual(&self, tuple: [usize; 4]) -> Vec<F> {
        jordan_residual_with(&self.product_table(), self.m, tuple)
    }

    /// Check the Jordan superidentity on every basis 4-tuple; by
    /// multilinearity this decides it for all homogeneous elements.
    pub fn check_jordan_superidentity(&self) -> Result<(), IdentityViolation<F>> {
        let table = self.product_table();
        let d = self.dim();
        for w in 0..d {
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        let r = jordan_residual_with(&table, self.m, [w, x, y, z]);
                        if r.iter().any(|c| !c.is_zero()) {
                            return Err(IdentityViolation { tuple: [w, x, y, z], residual: r });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_jordan_superalgebra(&self) -> bool {
        self.check_supercommutativity().is_ok() && self.check_jordan_superidentity().is_ok()
    }

    /// First basis triple with `(xy)z != x(yz)`, if any.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let table = self.product_table();
        let d = self.dim();
        let unit = |i: usize| {
            let mut v = vec![F::zero(); d];
            v[i] = F::one();
            v
        };
        for x in 0..d {
            for y in 0..d {
                let xy = &table[x][y];
                for z in 0..d {
                    let left = mul_with_table(&table, xy, &unit(z));
                    let right = mul_with_table(&table, &unit(x), &table[y][z]);
                    if left != right {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }
}

pub(crate) fn jordan_residual_with<F: Field>(table: &[Vec<Vec<F>>], m: usize, tuple: [usize; 4]) -> Vec<F> {
    let [w, x, y, z] = tuple;
    let p = |i: usize| u8::from(i >= m);
    let (pw, px, py, pz) = (p(w), p(x), p(y), p(z));
    let d = table.len();
    let unit = |i: usize| {
        let mut v = vec![F::zero(); d];
        v[i] = F::one();
        v
    };
    let mul = |a: &[F], b: &[F]| mul_with_table(table, a, b);
    let t = |i: usize, j: usize| table[i][j].clone();

    let mut acc = vec![F::zero(); d];
    axpy(&mut acc, false, &sign(0, mul(&t(w, x), &t(y, z))));
    axpy(&mut acc, false, &sign(px * py, mul(&t(w, y), &t(x, z))));
    axpy(&mut acc, false, &sign((px + py) * pz, mul(&t(w, z), &t(x, y))));
    let wyz = mul(&unit(w), &t(y, z));
    axpy(&mut acc, true, &sign(pw * px, mul(&unit(x), &wyz)));
    let wxz = mul(&unit(w), &t(x, z));
    axpy(&mut acc, true, &sign(py * (pw + px), mul(&unit(y), &wxz)));
    let wxy = mul(&unit(w), &t(x, y));
    axpy(&mut acc, true, &sign(pz * (pw + px + py), mul(&unit(z), &wxy)));
    acc
}

#[cfg(test)]
mod tests {
    use super::super::tests::{algebra_3, build, s};
    use super::*;
    use crate::exact::Scalar;

    #[test]
    fn supercommutativity_witness() {
        let mut a = algebra_3();
        assert!(a.check_supercommutativity().is_ok());
        a.gamma.set(1, 0, 0, Scalar::from(1));
        let v = a.check_supercommutativity().unwrap_err();
        assert_eq!(v.tensor, TensorName::Gamma);
        assert_eq!(v.to_string(), "gamma[1,2,1] != -gamma[2,1,1]");
    }

    #[test]
    fn jordan_examples() {
        assert!(algebra_3().check_jordan_superidentity().is_ok());
        assert!(SuperAlgebra::<Scalar>::zero(2, 2).check_jordan_superidentity().is_ok());
        // e1e1 = e2, e2e2 = e1 is commutative but not Jordan
        let bad = build(&[(0, 0, 1, s(1, 1)), (1, 1, 0, s(1, 1))]);
        let v = bad.check_jordan_superidentity().unwrap_err();
        assert!(v.residual.iter().any(|c| !c.is_zero()));
        assert!(v.tuple.iter().all(|&i| i < 2));
    }

    #[test]
    fn odd_action_with_wrong_weight_fails() {
        // e1e1 = e1, e1f1 = f1/3 is not a Jordan superalgebra
        let a = build(&[(0, 0, 0, s(1, 1)), (0, 2, 2, s(1, 3))]);
        assert!(a.check_supercommutativity().is_ok());
        assert!(a.check_jordan_superidentity().is_err());
        let ok = build(&[(0, 0, 0, s(1, 1)), (0, 2, 2, s(1, 2))]);
        assert!(ok.check_jordan_superidentity().is_ok());
        let ok = build(&[(0, 0, 0, s(1, 1)), (0, 2, 2, s(1, 1))]);
        assert!(ok.check_jordan_superidentity().is_ok());
    }

    #[test]
    fn associativity() {
        assert!(!algebra_3().is_associative());
        let a = build(&[(0, 0, 0, s(1, 1)), (0, 2, 2, s(1, 1))]);
        assert!(a.is_associative());
        let half = build(&[(0, 0, 0, s(1, 1)), (0, 2, 2, s(1, 2))]);
        assert_eq!(half.associativity_witness(), Some([0, 0, 2]));
    }
}
