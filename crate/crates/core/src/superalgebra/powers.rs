use super::{mul_with_table, SuperAlgebra};
use crate::error::{Error, Result};
use crate::exact::Field;
use crate::linear::span_basis;

/// Graded dimensions `(even, odd)` of a subspace.
pub type PowerDims = (usize, usize);

/// Homogeneous spanning sets of a graded subspace.
struct GradedSpan<F> {
    even: Vec<Vec<F>>,
    odd: Vec<Vec<F>>,
}

impl<F: Field> SuperAlgebra<F> {
    /// Bases of `A^1, ..., A^max_r` with `A^r = A^{r-1}A + ... + AA^{r-1}`.
    fn power_spans(&self, max_r: usize) -> Vec<GradedSpan<F>> {
        let (m, d) = (self.m, self.dim());
        let table = self.product_table();
        let unit = |i: usize| {
            let mut v = vec![F::zero(); d];
            v[i] = F::one();
            v
        };
        let mut spans = vec![GradedSpan {
            even: (0..m).map(unit).collect(),
            odd: (m..d).map(unit).collect(),
        }];
        for r in 2..=max_r {
            let mut even = Vec::new();
            let mut odd = Vec::new();
            for i in 1..r {
                let (left, right) = (&spans[i - 1], &spans[r - i - 1]);
                for (lp, lv) in [(0u8, &left.even), (1, &left.odd)] {
                    for (rp, rv) in [(0u8, &right.even), (1, &right.odd)] {
                        for u in lv.iter() {
                            for v in rv.iter() {
                                let w = mul_with_table(&table, u, v);
                                if w.iter().all(Field::is_zero) {
                                    continue;
                                }
                                if lp ^ rp == 0 {
                                    even.push(w);
                                } else {
                                    odd.push(w);
                                }
                            }
                        }
                    }
                }
            }
            spans.push(GradedSpan {
                even: span_basis(d, &even).expect("uniform length"),
                odd: span_basis(d, &odd).expect("uniform length"),
            });
        }
        spans
    }

    /// Graded dimensions of `A^r`.
    pub fn power_dims(&self, r: usize) -> Result<PowerDims> {
        if r == 0 {
            return Err(Error::InvalidArgument("power index r must be at least 1".into()));
        }
        let spans = self.power_spans(r);
        let last = &spans[r - 1];
        Ok((last.even.len(), last.odd.len()))
    }

    /// Graded dimensions of `A^1, ..., A^max_r`.
    pub fn power_chain(&self, max_r: usize) -> Vec<PowerDims> {
        self.power_spans(max_r)
            .iter()
            .map(|s| (s.even.len(), s.odd.len()))
            .collect()
    }

    /// Smallest `r <= m + n + 1` with `A^r = 0`, if any.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.power_chain(self.dim() + 1)
            .iter()
            .position(|&d| d == (0, 0))
            .map(|i| i + 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }
}
