//! Necessary conditions for `A -> B`. Each violated condition is an
//! [`Obstruction`]; an empty list means no obstruction was found, which
//! does not prove a degeneration.

use std::fmt;

use serde::Serialize;

use super::poset::Dim2Poset;
use super::profile::{profile, EvenLabel, InvariantProfile, Invariants};
use crate::exact::Scalar;
use crate::superalgebra::SuperAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// `dim Aut(A) >= dim Aut(B)` for non-isomorphic `A`, `B`. For a family
    /// source, `dim Aut(B)` below the generic value.
    DimAut { source: usize, target: usize, family: bool },
    /// `dim (A^r)_i < dim (B^r)_i`.
    PowerDim { r: usize, parity: u8, source: usize, target: usize },
    /// The even parts do not degenerate.
    EvenPart { source: EvenLabel, target: EvenLabel },
    /// Obstructions between `ab(A)` and `ab(B)`.
    Ab { inner: Vec<Obstruction> },
    /// Obstructions between `F(A)` and `F(B)`.
    Forget { inner: Vec<Obstruction> },
    /// `A` is associative and `B` is not.
    Associativity,
    /// An identity of `A` of the given degree fails in `B`.
    Identity { degree: usize, odd: usize, identity: String },
    /// Even elements act on `A_1` by scalars in `A` but not in `B`.
    ScalarOddAction,
    /// A relation among the characteristic coefficients of the blocks of
    /// `L_x` on `A_0` and `A_1`, `x` even, holds in `A` and fails in `B`.
    EvenSpectrum { relation: String },
    /// The underlying ordinary algebras do not degenerate: all derivations
    /// counted, or commutativity lost.
    AsAlgebras { inner: Vec<Obstruction> },
    /// `A` is commutative as an ordinary algebra and `B` is not.
    Commutativity,
    /// A relation among the characteristic coefficients of `L_x` in `A`
    /// fails in `B`.
    Spectrum { relation: String },
}

impl Obstruction {
    /// The item of the necessary-condition list, `(i)` to `(vii)`.
    pub fn code(&self) -> &'static str {
        match self {
            Obstruction::DimAut { .. } => "(i)",
            Obstruction::PowerDim { .. } => "(ii)",
            Obstruction::EvenPart { .. } => "(iii)",
            Obstruction::Ab { .. } => "(iv)",
            Obstruction::Forget { .. } => "(v)",
            Obstruction::Associativity | Obstruction::Identity { .. } => "(vi)",
            Obstruction::ScalarOddAction => "(vii)",
            Obstruction::EvenSpectrum { .. } => "(spec)",
            Obstruction::AsAlgebras { .. } | Obstruction::Commutativity | Obstruction::Spectrum { .. } => "(alg)",
        }
    }
}

fn join(inner: &[Obstruction]) -> String {
    inner.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let code = self.code();
        match self {
            Obstruction::DimAut { source, target, family: false } => {
                write!(f, "{code} dim Aut: {source} >= {target}")
            }
            Obstruction::DimAut { source, target, family: true } => {
                write!(f, "{code} dim Aut: {target} < {source} (generic over the family)")
            }
            Obstruction::PowerDim { r, parity, source, target } => {
                write!(f, "{code} dim (A^{r})_{parity}: {source} < {target}")
            }
            Obstruction::EvenPart { source, target } => write!(f, "{code} even parts: {source} does not degenerate to {target}"),
            Obstruction::Ab { inner } => write!(f, "{code} ab: [{}]", join(inner)),
            Obstruction::Forget { inner } => write!(f, "{code} F: [{}]", join(inner)),
            Obstruction::Associativity => write!(f, "{code} source associative, target not"),
            Obstruction::Identity { identity, .. } => write!(f, "{code} identity fails in target: {identity}"),
            Obstruction::ScalarOddAction => write!(f, "{code} scalar odd action lost"),
            Obstruction::EvenSpectrum { relation } => write!(f, "{code} even L_x spectrum relation fails in target: {relation}"),
            Obstruction::AsAlgebras { inner } => write!(f, "{code} as algebras: [{}]", join(inner)),
            Obstruction::Commutativity => write!(f, "source commutative, target not"),
            Obstruction::Spectrum { relation } => write!(f, "L_x spectrum relation fails in target: {relation}"),
        }
    }
}

/// How much is known about isomorphism between the two sides, which
/// decides when equal automorphism dimensions obstruct.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Isomorphism {
    /// The sides are known to be non-isomorphic.
    Excluded,
    /// Nothing is known; only differing invariants exclude it.
    Unknown,
}

/// Which conditions beyond the seven standard items are checked. All are
/// on by default; [`SeparateOptions::strict`] turns them off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparateOptions {
    /// Compare all multilinear identities of low degree, not only
    /// associativity.
    pub identities: bool,
    /// Compare relations among characteristic coefficients of even `L_x`.
    pub spectra: bool,
    /// Compare the underlying ordinary algebras.
    pub as_algebras: bool,
}

impl Default for SeparateOptions {
    fn default() -> Self {
        SeparateOptions {
            identities: true,
            spectra: true,
            as_algebras: true,
        }
    }
}

impl SeparateOptions {
    pub fn strict() -> Self {
        SeparateOptions {
            identities: false,
            spectra: false,
            as_algebras: false,
        }
    }
}

fn aut_obstructs(source: usize, target: usize, generic: bool, iso: Isomorphism, same: bool) -> bool {
    // A proper degeneration raises dim Aut. Over a family the generic value
    // is the minimum, and members or their degenerations have at least it.
    if generic {
        return target < source;
    }
    match iso {
        Isomorphism::Excluded => source >= target,
        Isomorphism::Unknown => source > target || (source == target && !same),
    }
}

fn compare(a: &Invariants, b: &Invariants, poset: &Dim2Poset, iso: Isomorphism, opts: SeparateOptions) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if aut_obstructs(a.dim_aut, b.dim_aut, a.generic, iso, a.same_as(b)) {
        out.push(Obstruction::DimAut {
            source: a.dim_aut,
            target: b.dim_aut,
            family: a.generic,
        });
    }
    for (i, (pa, pb)) in a.power_dims.iter().zip(&b.power_dims).enumerate() {
        for (parity, x, y) in [(0u8, pa.0, pb.0), (1, pa.1, pb.1)] {
            if x < y {
                out.push(Obstruction::PowerDim {
                    r: i + 1,
                    parity,
                    source: x,
                    target: y,
                });
            }
        }
    }
    if let (Some(x), Some(y)) = (a.even_part_label, b.even_part_label) {
        if !poset.degenerates(x, y) {
            out.push(Obstruction::EvenPart { source: x, target: y });
        }
    }
    if a.associative && !b.associative {
        out.push(Obstruction::Associativity);
    }
    if opts.identities {
        if let Some(((degree, odd), identity)) = a.identities.first_failure_in(&b.identities) {
            out.push(Obstruction::Identity { degree, odd, identity });
        }
    }
    if a.scalar_odd_action && !b.scalar_odd_action {
        out.push(Obstruction::ScalarOddAction);
    }
    if opts.spectra {
        if let (Some(sa), Some(sb)) = (&a.even_spectrum, &b.even_spectrum) {
            if let Some(relation) = sa.first_failure_in(sb) {
                out.push(Obstruction::EvenSpectrum { relation });
            }
        }
    }
    if opts.as_algebras {
        out.extend(compare_as_algebras(a, b));
    }
    out
}

fn compare_as_algebras(a: &Invariants, b: &Invariants) -> Option<Obstruction> {
    // Distinct superalgebras may be isomorphic as algebras, so only
    // differing invariants exclude it here.
    let (ua, ub) = (&a.as_algebra, &b.as_algebra);
    let mut alg = Vec::new();
    if aut_obstructs(ua.dim_der, ub.dim_der, a.generic, Isomorphism::Unknown, ua == ub) {
        alg.push(Obstruction::DimAut {
            source: ua.dim_der,
            target: ub.dim_der,
            family: a.generic,
        });
    }
    if ua.commutative && !ub.commutative {
        alg.push(Obstruction::Commutativity);
    }
    if let (Some(sa), Some(sb)) = (&ua.spectrum, &ub.spectrum) {
        if let Some(relation) = sa.first_failure_in(sb) {
            alg.push(Obstruction::Spectrum { relation });
        }
    }
    (!alg.is_empty()).then_some(Obstruction::AsAlgebras { inner: alg })
}

/// Every violated necessary condition for `A -> B`, given profiles. When
/// `distinct` is set the two algebras are known to be non-isomorphic, as
/// for different entries of a classification.
pub fn separate_profiles(
    a: &InvariantProfile,
    b: &InvariantProfile,
    poset: &Dim2Poset,
    distinct: bool,
    opts: SeparateOptions,
) -> Vec<Obstruction> {
    let iso = if distinct { Isomorphism::Excluded } else { Isomorphism::Unknown };
    let mut out = compare(&a.own, &b.own, poset, iso, opts);
    let ab = compare(&a.ab, &b.ab, poset, Isomorphism::Unknown, opts);
    if !ab.is_empty() {
        out.push(Obstruction::Ab { inner: ab });
    }
    let forget = compare(&a.forget, &b.forget, poset, Isomorphism::Unknown, opts);
    if !forget.is_empty() {
        out.push(Obstruction::Forget { inner: forget });
    }
    out
}

/// Every violated necessary condition for `A -> B`. The two algebras are
/// assumed non-isomorphic when their tables differ.
pub fn separate(a: &SuperAlgebra<Scalar>, b: &SuperAlgebra<Scalar>, poset: &Dim2Poset) -> Vec<Obstruction> {
    separate_with(a, b, poset, SeparateOptions::default())
}

pub fn separate_with(
    a: &SuperAlgebra<Scalar>,
    b: &SuperAlgebra<Scalar>,
    poset: &Dim2Poset,
    opts: SeparateOptions,
) -> Vec<Obstruction> {
    if a == b {
        return Vec::new();
    }
    separate_profiles(&profile(a), &profile(b), poset, true, opts)
}
