//! The Grassmann algebra on `N` generators and the Grassmann envelope
//! `G(A) = G_0 (x) A_0 + G_1 (x) A_1` of a superalgebra.

use super::SuperAlgebra;
use crate::error::{Error, Result};
use crate::exact::Field;

/// Sign of `e_S e_T` for disjoint generator sets given as bit masks:
/// `true` when the interleaving permutation is odd. `None` if `S` and `T`
/// intersect, in which case the product is zero.
pub fn product_sign(s: u32, t: u32) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0u32;
    for b in 0..32 {
        if t & (1 << b) != 0 {
            inversions += (s >> (b + 1)).count_ones();
        }
    }
    Some(inversions % 2 == 1)
}

/// An element of the Grassmann algebra on `N` generators, with one
/// coordinate per subset `S` of `{1..N}` (bit mask order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannElement<F> {
    generators: usize,
    coords: Vec<F>,
}

impl<F: Field> GrassmannElement<F> {
    pub fn zero(generators: usize) -> Self {
        GrassmannElement {
            generators,
            coords: vec![F::zero(); 1 << generators],
        }
    }

    /// The basis monomial `e_S`.
    pub fn basis(generators: usize, mask: u32) -> Self {
        let mut x = Self::zero(generators);
        x.coords[mask as usize] = F::one();
        x
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn coord(&self, mask: u32) -> &F {
        &self.coords[mask as usize]
    }

    /// `Some(parity)` if every nonzero monomial has the same length parity.
    pub fn parity(&self) -> Option<u8> {
        let mut found = None;
        for (mask, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = (mask.count_ones() % 2) as u8;
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(0))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.generators != other.generators {
            return Err(Error::DimensionMismatch(format!(
                "Grassmann algebras on {} and {} generators",
                self.generators, other.generators
            )));
        }
        let mut out = Self::zero(self.generators);
        for (s, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if let Some(neg) = product_sign(s as u32, t as u32) {
                    let c = a.clone() * b;
                    let slot = &mut out.coords[s | t];
                    *slot = if neg { slot.clone() - &c } else { slot.clone() + &c };
                }
            }
        }
        Ok(out)
    }
}

/// An element of the envelope, stored densely as `coords[mask][k]` for the
/// tensor `e_S (x) b_k`; only parity-matching pairs are ever nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
struct EnvElement<F> {
    coords: Vec<Vec<F>>,
}

struct Envelope<F> {
    table: Vec<Vec<Vec<F>>>,
    generators: usize,
    dim: usize,
}

impl<F: Field> Envelope<F> {
    fn zero(&self) -> EnvElement<F> {
        EnvElement {
            coords: vec![vec![F::zero(); self.dim]; 1 << self.generators],
        }
    }

    fn basis(&self, mask: u32, k: usize) -> EnvElement<F> {
        let mut x = self.zero();
        x.coords[mask as usize][k] = F::one();
        x
    }

    /// `(x (x) u)(y (x) v) = xy (x) uv`.
    fn mul(&self, a: &EnvElement<F>, b: &EnvElement<F>) -> EnvElement<F> {
        let mut out = self.zero();
        for (s, ua) in a.coords.iter().enumerate() {
            if ua.iter().all(Field::is_zero) {
                continue;
            }
            for (t, vb) in b.coords.iter().enumerate() {
                let Some(neg) = product_sign(s as u32, t as u32) else {
                    continue;
                };
                for (i, x) in ua.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in vb.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let c = x.clone() * y;
                        for (k, p) in self.table[i][j].iter().enumerate() {
                            if p.is_zero() {
                                continue;
                            }
                            let term = c.clone() * p;
                            let slot = &mut out.coords[s | t][k];
                            *slot = if neg { slot.clone() - &term } else { slot.clone() + &term };
                        }
                    }
                }
            }
        }
        out
    }

    fn add(&self, a: &mut EnvElement<F>, b: &EnvElement<F>, negate: bool) {
        for (ra, rb) in a.coords.iter_mut().zip(&b.coords) {
            for (x, y) in ra.iter_mut().zip(rb) {
                if !y.is_zero() {
                    *x = if negate { x.clone() - y } else { x.clone() + y };
                }
            }
        }
    }

    fn is_zero(a: &EnvElement<F>) -> bool {
        a.coords.iter().flatten().all(Field::is_zero)
    }
}

/// Ordered tuples of pairwise disjoint generator sets, by assigning each
/// generator to one slot or to none.
fn disjoint_mask_tuples(generators: usize, slots: usize) -> Vec<Vec<u32>> {
    let choices = slots + 1;
    let total = choices.pow(generators as u32);
    (0..total)
        .map(|mut code| {
            let mut masks = vec![0u32; slots];
            for g in 0..generators {
                let slot = code % choices;
                code /= choices;
                if slot < slots {
                    masks[slot] |= 1 << g;
                }
            }
            masks
        })
        .collect()
}

/// Check that the Grassmann envelope truncated to `generators` generators
/// is commutative and satisfies the multilinear Jordan identity
///
/// ```text
/// (wx)(yz) + (wy)(xz) + (wz)(xy) - x(w(yz)) - y(w(xz)) - z(w(xy)) = 0
/// ```
///
/// on all basis pairs and 4-tuples with disjoint generator sets.
pub fn grassmann_envelope_check<F: Field>(a: &SuperAlgebra<F>, generators: usize) -> Result<bool> {
    if !(3..=8).contains(&generators) {
        return Err(Error::InvalidArgument(format!(
            "Grassmann envelope needs between 3 and 8 generators, got {generators}"
        )));
    }
    let env = Envelope {
        table: a.product_table(),
        generators,
        dim: a.dim(),
    };
    let basis_for = |mask: u32| -> Vec<usize> {
        let p = (mask.count_ones() % 2) as u8;
        (0..a.dim()).filter(|&k| a.parity(k) == p).collect()
    };

    for masks in disjoint_mask_tuples(generators, 2) {
        for &i in &basis_for(masks[0]) {
            for &j in &basis_for(masks[1]) {
                let x = env.basis(masks[0], i);
                let y = env.basis(masks[1], j);
                if env.mul(&x, &y) != env.mul(&y, &x) {
                    return Ok(false);
                }
            }
        }
    }

    for masks in disjoint_mask_tuples(generators, 4) {
        let choices: Vec<Vec<usize>> = masks.iter().map(|&m| basis_for(m)).collect();
        for &iw in &choices[0] {
            for &ix in &choices[1] {
                for &iy in &choices[2] {
                    for &iz in &choices[3] {
                        let w = env.basis(masks[0], iw);
                        let x = env.basis(masks[1], ix);
                        let y = env.basis(masks[2], iy);
                        let z = env.basis(masks[3], iz);
                        let m = |p: &EnvElement<F>, q: &EnvElement<F>| env.mul(p, q);
                        let mut acc = m(&m(&w, &x), &m(&y, &z));
                        env.add(&mut acc, &m(&m(&w, &y), &m(&x, &z)), false);
                        env.add(&mut acc, &m(&m(&w, &z), &m(&x, &y)), false);
                        env.add(&mut acc, &m(&x, &m(&w, &m(&y, &z))), true);
                        env.add(&mut acc, &m(&y, &m(&w, &m(&x, &z))), true);
                        env.add(&mut acc, &m(&z, &m(&w, &m(&x, &y))), true);
                        if !Envelope::is_zero(&acc) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
