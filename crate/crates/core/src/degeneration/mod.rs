//! Degenerations `A -> B`: verification of explicit curves, refutation by
//! invariants, and the resulting partial order.

mod certificate;
mod components;
mod hasse;
mod poset;
mod profile;
mod separate;

pub use certificate::{
    apply_curve, family_certificate_check, limit_at_zero, load_certificates, verify_certificate,
    DegenerationCertificate, FamilyCheck, Verification, CURVE_VAR,
};
pub use components::{
    component_report, scaling_certificates, Claim, ClosureClaim, ClosureReport, ComponentClaims, ComponentReport,
    MemberStatus, Restriction, BUILTIN_COMPONENTS,
};
pub use hasse::{catalog_profiles, catalog_profiles_with, hasse, separation_sweep, Hasse, PairStatus, Separations};
pub use poset::{Dim2Curve, Dim2Poset, BUILTIN_DIM2_POSET};
pub use profile::{family_profile, profile, EvenLabel, InvariantProfile, Invariants, UngradedInvariants};
pub use separate::{separate, separate_profiles, separate_with, Obstruction, SeparateOptions};
