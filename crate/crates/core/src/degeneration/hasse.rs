//! The degeneration order on a catalog: established by certificates,
//! refuted by invariants, unknown otherwise.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use super::certificate::{verify_certificate, DegenerationCertificate, Verification};
use super::poset::Dim2Poset;
use super::profile::{family_profile, profile, InvariantProfile};
use super::separate::{separate_profiles, Obstruction, SeparateOptions};
use crate::catalog::{Catalog, CatalogAlgebra};
use crate::error::{Error, Result};

/// Profiles of every catalog entry, computed on all available cores.
pub fn catalog_profiles(catalog: &Catalog) -> BTreeMap<String, InvariantProfile> {
    catalog_profiles_with(catalog, std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Profiles of every catalog entry on at most `workers` threads.
pub fn catalog_profiles_with(catalog: &Catalog, workers: usize) -> BTreeMap<String, InvariantProfile> {
    let entries = catalog.entries();
    let workers = workers.max(1).min(entries.len().max(1));
    let chunk = entries.len().div_ceil(workers.max(1)).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|e| {
                            let p = match &e.algebra {
                                CatalogAlgebra::Concrete(a) => profile(a),
                                CatalogAlgebra::Family(f) => family_profile(f),
                            };
                            (e.name.clone(), p)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("profile worker")).collect()
    })
}

/// Obstructions for every ordered pair of distinct entries whose target is
/// a single algebra. Pairs with no obstruction are absent.
#[derive(Clone, Debug, Default)]
pub struct Separations {
    pub pairs: BTreeMap<(String, String), Vec<Obstruction>>,
}

impl Separations {
    pub fn get(&self, source: &str, target: &str) -> Option<&[Obstruction]> {
        self.pairs
            .get(&(source.to_string(), target.to_string()))
            .map(Vec::as_slice)
    }

    pub fn is_refuted(&self, source: &str, target: &str) -> bool {
        self.get(source, target).is_some()
    }
}

/// Separate every pair of distinct catalog entries. Distinct entries are
/// taken to be non-isomorphic.
pub fn separation_sweep(
    catalog: &Catalog,
    profiles: &BTreeMap<String, InvariantProfile>,
    poset: &Dim2Poset,
    opts: SeparateOptions,
) -> Separations {
    let mut pairs = BTreeMap::new();
    for a in catalog.entries() {
        for b in catalog.concrete() {
            if a.name == b.name {
                continue;
            }
            let obs = separate_profiles(&profiles[&a.name], &profiles[&b.name], poset, true, opts);
            if !obs.is_empty() {
                pairs.insert((a.name.clone(), b.name.clone()), obs);
            }
        }
    }
    Separations { pairs }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairStatus {
    Established,
    Refuted,
    Unknown,
}

/// The three-valued degeneration relation on the catalog.
#[derive(Clone, Debug)]
pub struct Hasse {
    names: Vec<String>,
    established: BTreeSet<(usize, usize)>,
    /// Pairs with a verified certificate of their own.
    direct: BTreeSet<(usize, usize)>,
    separations: Separations,
    pub verifications: Vec<Verification>,
    /// Certificates that could not be evaluated, with the error.
    pub errors: Vec<(String, String, String)>,
}

/// Verify the certificates, close the verified pairs under transitivity
/// and combine with the separations. A pair that is both established and
/// refuted is a soundness violation.
pub fn hasse(certs: &[DegenerationCertificate], separations: &Separations, catalog: &Catalog) -> Result<Hasse> {
    let names: Vec<String> = catalog.entries().iter().map(|e| e.name.clone()).collect();
    let index = |name: &str| names.iter().position(|n| n == name);
    let mut verifications = Vec::new();
    let mut errors = Vec::new();
    let mut direct = BTreeSet::new();
    for cert in certs {
        match verify_certificate(cert, catalog) {
            Ok(v) => {
                if v.passed {
                    let (Some(a), Some(b)) = (index(&v.source), index(&v.target)) else {
                        unreachable!("verified certificates name catalog entries");
                    };
                    direct.insert((a, b));
                }
                verifications.push(v);
            }
            Err(e) => errors.push((cert.source.clone(), cert.target.clone(), e.to_string())),
        }
    }
    let n = names.len();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in &direct {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut established = BTreeSet::new();
    for (i, row) in reach.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r {
                established.insert((i, j));
            }
        }
    }
    for &(i, j) in &established {
        if let Some(obs) = separations.get(&names[i], &names[j]) {
            let reasons: Vec<String> = obs.iter().map(ToString::to_string).collect();
            return Err(Error::Soundness(format!(
                "{} -> {} is established by certificates but refuted by {}",
                names[i],
                names[j],
                reasons.join("; ")
            )));
        }
    }
    Ok(Hasse {
        names,
        established,
        direct,
        separations: separations.clone(),
        verifications,
        errors,
    })
}

impl Hasse {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn status(&self, source: &str, target: &str) -> PairStatus {
        match (self.index(source), self.index(target)) {
            (Some(a), Some(b)) if self.established.contains(&(a, b)) => PairStatus::Established,
            _ if self.separations.is_refuted(source, target) => PairStatus::Refuted,
            _ => PairStatus::Unknown,
        }
    }

    pub fn obstructions(&self, source: &str, target: &str) -> Option<&[Obstruction]> {
        self.separations.get(source, target)
    }

    /// Established pairs `(source, target)`, reflexive ones included.
    pub fn established(&self) -> impl Iterator<Item = (&str, &str)> {
        self.established
            .iter()
            .map(|&(a, b)| (self.names[a].as_str(), self.names[b].as_str()))
    }

    /// Pairs with a verified certificate of their own.
    pub fn direct(&self) -> impl Iterator<Item = (&str, &str)> {
        self.direct
            .iter()
            .map(|&(a, b)| (self.names[a].as_str(), self.names[b].as_str()))
    }

    /// Established proper pairs not implied by transitivity through a third
    /// entry.
    pub fn covering(&self) -> Vec<(&str, &str)> {
        let n = self.names.len();
        self.established
            .iter()
            .filter(|&&(a, b)| a != b)
            .filter(|&&(a, b)| {
                !(0..n).any(|k| {
                    k != a && k != b && self.established.contains(&(a, k)) && self.established.contains(&(k, b))
                })
            })
            .map(|&(a, b)| (self.names[a].as_str(), self.names[b].as_str()))
            .collect()
    }

    /// Ordered pairs of distinct entries with neither a certificate nor an
    /// obstruction. Families are never targets.
    pub fn unknown(&self, catalog: &Catalog) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for a in catalog.entries() {
            for b in catalog.concrete() {
                if a.name != b.name && self.status(&a.name, &b.name) == PairStatus::Unknown {
                    out.push((a.name.clone(), b.name.clone()));
                }
            }
        }
        out
    }

    /// Graphviz rendering: solid edges for the covering relation of the
    /// established order, dashed edges labelled with the obstruction items
    /// for refuted pairs, dotted edges for unknown pairs.
    pub fn to_dot(&self, catalog: &Catalog) -> String {
        let mut out = String::from("digraph degenerations {\n  rankdir=TB;\n  node [shape=box];\n");
        for name in &self.names {
            let _ = writeln!(out, "  \"{name}\";");
        }
        for (a, b) in self.covering() {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [style=solid];");
        }
        for ((a, b), obs) in &self.separations.pairs {
            let codes: BTreeSet<&str> = obs.iter().map(Obstruction::code).collect();
            let label = codes.into_iter().collect::<Vec<_>>().join(",");
            let _ = writeln!(
                out,
                "  \"{a}\" -> \"{b}\" [style=dashed, arrowhead=tee, label=\"{label}\"];"
            );
        }
        for (a, b) in self.unknown(catalog) {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [style=dotted];");
        }
        out.push_str("}\n");
        out
    }
}
