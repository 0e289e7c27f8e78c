//! Orbit closures of the rigid entries: which catalog members each closure
//! is known to contain, known to miss, or left open, checked against a
//! claimed decomposition into irreducible components.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::certificate::DegenerationCertificate;
use super::hasse::{Hasse, PairStatus};
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::exact::{Field, RatFun};
use crate::superalgebra::SuperAlgebra;

pub const BUILTIN_COMPONENTS: &str = include_str!("../../data/components.json");

/// A claimed closure: the generator, the catalog entries it contains, and
/// the members whose membership is an open problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosureClaim {
    pub generator: String,
    pub members: Vec<String>,
    pub open: Vec<String>,
}

/// Claimed components of the whole variety and of the associative and
/// nilpotent subvarieties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentClaims {
    pub components: Vec<ClosureClaim>,
    pub associative: Vec<ClosureClaim>,
    pub nilpotent: Vec<ClosureClaim>,
}

impl ComponentClaims {
    pub fn builtin() -> ComponentClaims {
        Self::parse(BUILTIN_COMPONENTS).expect("the shipped component lists parse")
    }

    pub fn parse(text: &str) -> Result<ComponentClaims> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Members implied by transitivity: entries of a claimed closure of some
    /// claimed member of `generator`'s closure, not listed themselves.
    pub fn implied_members(&self, generator: &str) -> BTreeSet<String> {
        let lists: Vec<&ClosureClaim> = self.components.iter().chain(&self.associative).chain(&self.nilpotent).collect();
        let listed = |g: &str| -> BTreeSet<String> {
            lists.iter().filter(|c| c.generator == g).flat_map(|c| c.members.iter().cloned()).collect()
        };
        let direct = listed(generator);
        let mut reach = direct.clone();
        let mut frontier: Vec<String> = direct.iter().cloned().collect();
        while let Some(m) = frontier.pop() {
            if m == generator {
                continue;
            }
            for x in listed(&m) {
                if reach.insert(x.clone()) {
                    frontier.push(x);
                }
            }
        }
        reach.difference(&direct).cloned().collect()
    }

    /// Every `(generator, member)` pair claimed but marked open.
    pub fn open_pairs(&self) -> Vec<(String, String)> {
        self.components
            .iter()
            .flat_map(|c| c.open.iter().map(move |m| (c.generator.clone(), m.clone())))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Member,
    Open,
    /// Not listed, but contained in the closure of a listed member.
    Implied,
    Excluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberStatus {
    pub name: String,
    pub claim: Claim,
    pub status: PairStatus,
}

impl MemberStatus {
    /// A claimed member that is refuted, or a claimed exclusion that is
    /// established.
    pub fn contradicts_claim(&self) -> bool {
        matches!(
            (self.claim, self.status),
            (Claim::Member, PairStatus::Refuted) | (Claim::Excluded, PairStatus::Established)
        )
    }
}

/// The status of every catalog entry relative to one closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub generator: String,
    pub members: Vec<MemberStatus>,
}

impl ClosureReport {
    fn build(hasse: &Hasse, claim: &ClosureClaim, claims: &ComponentClaims, universe: &[String]) -> ClosureReport {
        let implied = claims.implied_members(&claim.generator);
        let members = universe
            .iter()
            .map(|name| {
                let claim_kind = if claim.open.contains(name) {
                    Claim::Open
                } else if claim.members.contains(name) {
                    Claim::Member
                } else if implied.contains(name) {
                    Claim::Implied
                } else {
                    Claim::Excluded
                };
                MemberStatus {
                    name: name.clone(),
                    claim: claim_kind,
                    status: hasse.status(&claim.generator, name),
                }
            })
            .collect();
        ClosureReport {
            generator: claim.generator.clone(),
            members,
        }
    }

    pub fn with_status(&self, status: PairStatus) -> impl Iterator<Item = &MemberStatus> {
        self.members.iter().filter(move |m| m.status == status)
    }

    pub fn contradictions(&self) -> impl Iterator<Item = &MemberStatus> {
        self.members.iter().filter(|m| m.contradicts_claim())
    }
}

/// The degeneration order restricted to a subset of the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Restriction {
    pub entries: Vec<String>,
    /// Entries with no established degeneration onto them from another
    /// entry of the subset.
    pub maximal: Vec<String>,
    pub claimed_maximal: Vec<String>,
    pub closures: Vec<ClosureReport>,
}

impl Restriction {
    fn build(hasse: &Hasse, entries: Vec<String>, lists: &[ClosureClaim], claims: &ComponentClaims) -> Restriction {
        let maximal = entries
            .iter()
            .filter(|b| {
                !entries
                    .iter()
                    .any(|a| a != *b && hasse.status(a, b) == PairStatus::Established)
            })
            .cloned()
            .collect();
        Restriction {
            closures: lists.iter().map(|c| ClosureReport::build(hasse, c, claims, &entries)).collect(),
            claimed_maximal: lists.iter().map(|c| c.generator.clone()).collect(),
            entries,
            maximal,
        }
    }

    pub fn maximal_matches_claim(&self) -> bool {
        let a: BTreeSet<&String> = self.maximal.iter().collect();
        let b: BTreeSet<&String> = self.claimed_maximal.iter().collect();
        a == b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub components: Vec<ClosureReport>,
    pub associative: Restriction,
    pub nilpotent: Restriction,
}

impl ComponentReport {
    /// Every contradiction between the computed order and the claims, as
    /// `(generator, entry, claim, status)`.
    pub fn contradictions(&self) -> Vec<(String, &MemberStatus)> {
        let all = self
            .components
            .iter()
            .chain(&self.associative.closures)
            .chain(&self.nilpotent.closures);
        let mut out = Vec::new();
        for c in all {
            for m in c.contradictions() {
                out.push((c.generator.clone(), m));
            }
        }
        out
    }

    pub fn closure(&self, generator: &str) -> Option<&ClosureReport> {
        self.components.iter().find(|c| c.generator == generator)
    }

    pub fn status(&self, generator: &str, member: &str) -> Option<PairStatus> {
        self.closure(generator)?
            .members
            .iter()
            .find(|m| m.name == member)
            .map(|m| m.status)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let contradictions = self.contradictions();
        if contradictions.is_empty() {
            out.push_str("no contradictions with the claimed components\n");
        } else {
            out.push_str(&format!("CONTRADICTIONS: {}\n", contradictions.len()));
            for (g, m) in &contradictions {
                out.push_str(&format!("  !! {g} -> {}: claimed {:?}, computed {:?}\n", m.name, m.claim, m.status));
            }
        }
        let names = |c: &ClosureReport, s: PairStatus| {
            c.with_status(s).map(|m| m.name.as_str()).collect::<Vec<_>>().join(" ")
        };
        for c in &self.components {
            out.push_str(&format!("closure of {}\n", c.generator));
            out.push_str(&format!("  established: {}\n", names(c, PairStatus::Established)));
            out.push_str(&format!("  unknown:     {}\n", names(c, PairStatus::Unknown)));
        }
        for (label, r) in [("associative", &self.associative), ("nilpotent", &self.nilpotent)] {
            out.push_str(&format!(
                "{label} subvariety: {} entries, maximal {} (claimed {})\n",
                r.entries.len(),
                r.maximal.join(" "),
                r.claimed_maximal.join(" ")
            ));
            for c in &r.closures {
                out.push_str(&format!("  closure of {}: {}\n", c.generator, names(c, PairStatus::Established)));
            }
        }
        out
    }
}

/// Compare the computed order with the claimed components. The associative
/// and nilpotent subsets are taken from the catalog flags.
pub fn component_report(catalog: &Catalog, hasse: &Hasse, claims: &ComponentClaims) -> ComponentReport {
    let universe: Vec<String> = catalog.concrete().map(|e| e.name.clone()).collect();
    let subset = |pick: fn(&crate::catalog::CatalogEntry) -> bool| {
        catalog.concrete().filter(|e| pick(e)).map(|e| e.name.clone()).collect::<Vec<_>>()
    };
    ComponentReport {
        components: claims
            .components
            .iter()
            .map(|c| ClosureReport::build(hasse, c, claims, &universe))
            .collect(),
        associative: Restriction::build(hasse, subset(|e| e.associative), &claims.associative, claims),
        nilpotent: Restriction::build(hasse, subset(|e| e.nilpotent), &claims.nilpotent, claims),
    }
}

/// The scaling certificate from every entry to the zero entry of the
/// catalog, if it has one. Families are scaled at the parameter value 1.
pub fn scaling_certificates(catalog: &Catalog) -> Vec<DegenerationCertificate> {
    let Some(zero) = catalog.concrete().find(|e| {
        e.concrete()
            .is_some_and(|a| *a == SuperAlgebra::zero(a.even_dim(), a.odd_dim()))
    }) else {
        return Vec::new();
    };
    let (m, n) = zero.concrete().map(|a| (a.even_dim(), a.odd_dim())).expect("concrete");
    catalog
        .entries()
        .iter()
        .filter(|e| e.name != zero.name)
        .map(|e| {
            let mut cert = DegenerationCertificate::scaling(&e.name, &zero.name, m, n);
            if e.is_family() {
                cert.gamma = Some(RatFun::one());
            }
            cert
        })
        .collect()
}
