//! Degenerations among the two-dimensional even parts.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;

use super::certificate::limit_at_zero;
use super::profile::EvenLabel;
use crate::error::{Error, Result};
use crate::exact::{parse_ratfun, parse_scalar, Field, RatFun, Scalar};
use crate::linear::Matrix;
use crate::superalgebra::SuperAlgebra;

pub const BUILTIN_DIM2_POSET: &str = include_str!("../../data/dim2poset.json");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    label: EvenLabel,
    products: Vec<(String, String, BTreeMap<String, String>)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    source: EvenLabel,
    target: EvenLabel,
    even_matrix: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoset {
    algebras: Vec<RawAlgebra>,
    certificates: Vec<RawCurve>,
    degenerations: Vec<(EvenLabel, EvenLabel)>,
}

/// A curve `g(t)` between two of the algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim2Curve {
    pub source: EvenLabel,
    pub target: EvenLabel,
    pub matrix: Matrix<RatFun>,
}

/// The degeneration relation on the six two-dimensional Jordan algebras,
/// with the algebras themselves and curves for the covering relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim2Poset {
    pub algebras: BTreeMap<EvenLabel, SuperAlgebra<Scalar>>,
    pub curves: Vec<Dim2Curve>,
    relation: BTreeSet<(EvenLabel, EvenLabel)>,
}

fn even_index(sym: &str) -> Result<usize> {
    match sym {
        "e1" => Ok(0),
        "e2" => Ok(1),
        _ => Err(Error::Parse(format!("unknown basis symbol {sym:?} in a two-dimensional algebra"))),
    }
}

impl Dim2Poset {
    pub fn builtin() -> Dim2Poset {
        Self::parse(BUILTIN_DIM2_POSET).expect("the shipped poset parses")
    }

    pub fn parse(text: &str) -> Result<Dim2Poset> {
        let raw: RawPoset = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut algebras = BTreeMap::new();
        for a in raw.algebras {
            let mut alg = SuperAlgebra::<Scalar>::zero(2, 0);
            for (lhs, rhs, coeffs) in &a.products {
                let mut v = vec![Scalar::zero(); 2];
                for (sym, c) in coeffs {
                    v[even_index(sym)?] = parse_scalar(c)?;
                }
                alg.set_supercommutative(even_index(lhs)?, even_index(rhs)?, &v)?;
            }
            algebras.insert(a.label, alg);
        }
        let curves = raw
            .certificates
            .iter()
            .map(|c| {
                let rows = c
                    .even_matrix
                    .iter()
                    .map(|r| r.iter().map(|s| parse_ratfun(s, "t")).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(Dim2Curve {
                    source: c.source,
                    target: c.target,
                    matrix: Matrix::from_rows(2, rows)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let relation: BTreeSet<_> = raw.degenerations.into_iter().collect();
        let poset = Dim2Poset {
            algebras,
            curves,
            relation,
        };
        poset.check_order()?;
        Ok(poset)
    }

    fn check_order(&self) -> Result<()> {
        for x in EvenLabel::ALL {
            if !self.degenerates(x, x) {
                return Err(Error::Parse(format!("relation is not reflexive at {x}")));
            }
        }
        for &(x, y) in &self.relation {
            for &(y2, z) in &self.relation {
                if y == y2 && !self.degenerates(x, z) {
                    return Err(Error::Parse(format!("relation is not transitive at {x} -> {y} -> {z}")));
                }
            }
        }
        Ok(())
    }

    pub fn degenerates(&self, x: EvenLabel, y: EvenLabel) -> bool {
        self.relation.contains(&(x, y))
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(EvenLabel, EvenLabel)> {
        self.relation.iter()
    }

    /// Check a stored curve: its limit must be exactly the target algebra.
    pub fn verify_curve(&self, curve: &Dim2Curve) -> Result<bool> {
        let src = &self.algebras[&curve.source];
        let moved = src.to_ratfun().transform(&curve.matrix, &Matrix::identity(0))?;
        Ok(limit_at_zero(&moved)? == self.algebras[&curve.target])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_poset() {
        let p = Dim2Poset::builtin();
        assert!(p.degenerates(EvenLabel::J1, EvenLabel::J4));
        assert!(!p.degenerates(EvenLabel::J1, EvenLabel::J5));
        for (label, a) in &p.algebras {
            assert_eq!(EvenLabel::classify(a), Some(*label));
        }
        for c in &p.curves {
            assert!(p.verify_curve(c).unwrap(), "{:?} -> {:?}", c.source, c.target);
        }
    }

    #[test]
    fn rejects_non_transitive() {
        let text = BUILTIN_DIM2_POSET.replace(r#"["J1", "J4"], "#, "");
        assert!(Dim2Poset::parse(&text).unwrap_err().to_string().contains("transitive"));
    }
}
