//! Invariants that obstruct degenerations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::derivation::{even_derivation_dim, ungraded_derivation_dim};
use crate::exact::{Field, Scalar};
use crate::superalgebra::identities::IdentitySignature;
use crate::superalgebra::spectrum::{Operators, SpectralRelations};
use crate::superalgebra::{ParamFamily, PowerDims, SuperAlgebra};

/// The two-dimensional Jordan algebras occurring as even parts:
///
/// ```text
/// J1: e1e1 = e1, e2e2 = e2       J4: e1e1 = e2
/// J2: e1e1 = e1                  J5: e1e1 = e1, e1e2 = e2/2
/// J3: e1e1 = e1, e1e2 = e2       J6: zero
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EvenLabel {
    J1,
    J2,
    J3,
    J4,
    J5,
    J6,
}

impl EvenLabel {
    pub const ALL: [EvenLabel; 6] = [
        EvenLabel::J1,
        EvenLabel::J2,
        EvenLabel::J3,
        EvenLabel::J4,
        EvenLabel::J5,
        EvenLabel::J6,
    ];

    /// Identify a two-dimensional algebra by `(dim Der, dim A^2,
    /// associative)`, which separates the six.
    pub fn classify<F: Field>(a: &SuperAlgebra<F>) -> Option<EvenLabel> {
        if a.even_dim() != 2 || a.odd_dim() != 0 {
            return None;
        }
        let der = even_derivation_dim(a);
        let square = a.power_chain(2)[1].0;
        match (der, square, a.is_associative()) {
            (0, 2, true) => Some(EvenLabel::J1),
            (1, 1, true) => Some(EvenLabel::J2),
            (1, 2, true) => Some(EvenLabel::J3),
            (2, 1, true) => Some(EvenLabel::J4),
            (2, 2, false) => Some(EvenLabel::J5),
            (4, 0, true) => Some(EvenLabel::J6),
            _ => None,
        }
    }
}

impl fmt::Display for EvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Invariants of one superalgebra, or the generic values over a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Invariants {
    pub dim_aut: usize,
    /// `(dim (A^r)_0, dim (A^r)_1)` for `r = 1..=m+n+1`.
    pub power_dims: Vec<PowerDims>,
    pub associative: bool,
    pub nilpotent: bool,
    pub scalar_odd_action: bool,
    pub even_part_label: Option<EvenLabel>,
    /// Values are generic over a family that really varies: `dim_aut` is
    /// the minimum and power dimensions the maximum over its members.
    pub generic: bool,
    pub as_algebra: UngradedInvariants,
    #[serde(skip)]
    pub identities: IdentitySignature,
    /// Relations among characteristic coefficients of `L_x` on `A_0` and
    /// `A_1` for even `x`, for single algebras only.
    #[serde(skip)]
    pub even_spectrum: Option<SpectralRelations>,
}

/// Invariants of the underlying ordinary algebra, grading forgotten.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct UngradedInvariants {
    /// Dimension of all derivations; the generic minimum over a family.
    pub dim_der: usize,
    /// `xy = yx` for all elements, that is, odd elements multiply to zero.
    pub commutative: bool,
    /// `dim A^r` for `r = 1..=m+n+1`.
    pub power_dims: Vec<usize>,
    pub associative: bool,
    /// Relations among characteristic coefficients of `L_x`, for single
    /// algebras only.
    #[serde(skip)]
    pub spectrum: Option<SpectralRelations>,
}

fn is_commutative<F: Field>(a: &SuperAlgebra<F>) -> bool {
    let d = a.dim();
    (a.even_dim()..d).all(|i| (a.even_dim()..d).all(|j| a.mul_basis(i, j).iter().all(F::is_zero)))
}

/// Parameter values at which a family's identities are sampled. Evaluation
/// rows are polynomials of degree at most 3 in the parameter, so five
/// points determine their span.
const IDENTITY_SAMPLES: [i64; 5] = [1, 2, 3, 4, 5];

impl Invariants {
    fn compute<F: Field>(
        a: &SuperAlgebra<F>,
        identities: IdentitySignature,
        spectra: Option<(SpectralRelations, SpectralRelations)>,
        generic: bool,
    ) -> Self {
        let (spectrum, even_spectrum) = spectra.map_or((None, None), |(full, even)| (Some(full), Some(even)));
        let power_dims = a.power_chain(a.dim() + 1);
        let associative = a.is_associative();
        let as_algebra = UngradedInvariants {
            dim_der: ungraded_derivation_dim(a),
            commutative: is_commutative(a),
            power_dims: power_dims.iter().map(|(x, y)| x + y).collect(),
            associative,
            spectrum,
        };
        Invariants {
            dim_aut: even_derivation_dim(a),
            nilpotent: power_dims.last() == Some(&(0, 0)),
            power_dims,
            associative,
            scalar_odd_action: a.scalar_odd_action(),
            even_part_label: EvenLabel::classify(&a.even_part()),
            generic,
            as_algebra,
            identities,
            even_spectrum,
        }
    }

    pub fn of(a: &SuperAlgebra<Scalar>) -> Self {
        let spectra = (SpectralRelations::of(a, Operators::Full), SpectralRelations::of(a, Operators::Even));
        Self::compute(a, IdentitySignature::of(a), Some(spectra), false)
    }

    /// Generic invariants of a family. A family whose constants do not
    /// involve the parameter is treated as the single algebra it is.
    pub fn of_family(fam: &ParamFamily) -> Self {
        if fam.is_constant() {
            return Self::of(&fam.at(&Scalar::one()));
        }
        let members: Vec<SuperAlgebra<Scalar>> =
            IDENTITY_SAMPLES.iter().map(|&v| fam.at(&Scalar::from(v))).collect();
        Self::compute(fam.generic(), IdentitySignature::of_all(&members), None, true)
    }

    /// Whether all invariants agree, a necessary condition for isomorphism.
    pub fn same_as(&self, other: &Invariants) -> bool {
        self == other
    }
}

/// The invariants of an algebra together with those of `ab(A)` (odd-odd
/// products only) and `F(A)` (odd-odd products dropped).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    #[serde(flatten)]
    pub own: Invariants,
    pub ab: Invariants,
    pub forget: Invariants,
}

impl InvariantProfile {
    pub fn is_family(&self) -> bool {
        self.own.generic
    }
}

pub fn profile(a: &SuperAlgebra<Scalar>) -> InvariantProfile {
    InvariantProfile {
        own: Invariants::of(a),
        ab: Invariants::of(&a.ab()),
        forget: Invariants::of(&a.forget()),
    }
}

pub fn family_profile(fam: &ParamFamily) -> InvariantProfile {
    let derived = |g: SuperAlgebra<_>| ParamFamily::new(fam.param(), g).expect("derived constants stay polynomial");
    InvariantProfile {
        own: Invariants::of_family(fam),
        ab: Invariants::of_family(&derived(fam.generic().ab())),
        forget: Invariants::of_family(&derived(fam.generic().forget())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    #[test]
    fn power_dims_oracles() {
        let cat = Catalog::builtin();
        // (2,2)_50: e1e1 = e2, e1f2 = f1, f1f2 = e2, so A^2 = <e2, f1>
        let p = profile(cat.algebra("(2,2)_50").unwrap());
        assert_eq!(p.own.power_dims[1], (1, 1));
        // (2,2)_47: e1e1 = e2, f1f2 = e1, so (A^2)_0 = <e1, e2>
        let p = profile(cat.algebra("(2,2)_47").unwrap());
        assert_eq!(p.own.power_dims[1].0, 2);
        assert!(!profile(cat.algebra("(2,2)_68").unwrap()).own.scalar_odd_action);
    }

    #[test]
    fn family_is_generic() {
        let cat = Catalog::builtin();
        let fam = cat.families().next().unwrap().family().unwrap();
        let p = family_profile(fam);
        assert!(p.own.generic);
        assert_eq!(p.own.dim_aut, 3);
        assert_eq!(p.own.even_part_label, Some(EvenLabel::J1));
        assert!(p.own.scalar_odd_action);
        assert_eq!(p.own.power_dims[1], (2, 2));
        // F(D) does not involve the parameter
        assert!(!p.forget.generic);
        assert!(p.ab.generic);
    }
}
