//! The catalog of Jordan superalgebras of type (2,2) and its JSON format.
//!
//! Each entry lists only canonical products (`e_i e_j` with `i <= j`,
//! `e_i f_j`, and `f_i f_j` with `i < j`); the remaining ones follow from
//! supercommutativity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::derivation::even_derivation_dim;
use crate::error::{Error, Result};
use crate::exact::{parse_ratfun, parse_scalar, Field, RatFun, Scalar};
use crate::superalgebra::{ParamFamily, SuperAlgebra};

/// The catalog shipped with the crate.
pub const BUILTIN_CATALOG: &str = include_str!("../data/catalog.json");

/// Name of the one-parameter family in the shipped catalog.
pub const FAMILY_NAME: &str = "D_gamma";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogAlgebra {
    Concrete(SuperAlgebra<Scalar>),
    Family(ParamFamily),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: CatalogAlgebra,
    pub associative: bool,
    pub nilpotent: bool,
    pub expected_dim_aut: usize,
}

impl CatalogEntry {
    pub fn concrete(&self) -> Option<&SuperAlgebra<Scalar>> {
        match &self.algebra {
            CatalogAlgebra::Concrete(a) => Some(a),
            CatalogAlgebra::Family(_) => None,
        }
    }

    pub fn family(&self) -> Option<&ParamFamily> {
        match &self.algebra {
            CatalogAlgebra::Family(f) => Some(f),
            CatalogAlgebra::Concrete(_) => None,
        }
    }

    pub fn is_family(&self) -> bool {
        self.family().is_some()
    }

    /// The number `i` of a name of the form `(m,n)_i`.
    pub fn index(&self) -> Option<usize> {
        entry_index(&self.name)
    }
}

/// The number `i` in `(2,2)_i`.
pub fn entry_index(name: &str) -> Option<usize> {
    name.rsplit_once('_')?.1.parse().ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        parse_catalog(BUILTIN_CATALOG).expect("the shipped catalog parses")
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        parse_catalog(&text)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
    }

    /// Look up a concrete entry by full name or by its bare number.
    pub fn resolve(&self, selector: &str) -> Result<&CatalogEntry> {
        if let Ok(e) = self.get(selector) {
            return Ok(e);
        }
        if let Ok(i) = selector.parse::<usize>() {
            if let Some(e) = self.entries.iter().find(|e| e.index() == Some(i) && !e.is_family()) {
                return Ok(e);
            }
        }
        if selector == "D" {
            if let Some(e) = self.entries.iter().find(|e| e.is_family()) {
                return Ok(e);
            }
        }
        Err(Error::UnknownAlgebra(selector.to_string()))
    }

    pub fn algebra(&self, name: &str) -> Result<&SuperAlgebra<Scalar>> {
        self.get(name)?
            .concrete()
            .ok_or_else(|| Error::InvalidArgument(format!("{name} is a family, not a single algebra")))
    }

    pub fn concrete(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| !e.is_family())
    }

    pub fn families(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.is_family())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    even: Vec<String>,
    odd: Vec<String>,
    products: Vec<(String, String, BTreeMap<String, String>)>,
    flags: RawFlags,
    expected_dim_aut: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family_param: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlags {
    associative: bool,
    nilpotent: bool,
}

fn catalog_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Catalog {
        location: location.into(),
        message: message.into(),
    }
}

/// Flat index of a basis symbol `e_i` / `f_j`.
fn symbol_index(sym: &str, m: usize, n: usize) -> Option<usize> {
    let (kind, num) = sym.split_at(1);
    let i: usize = num.parse().ok()?;
    if i == 0 || num.starts_with('0') {
        return None;
    }
    match kind {
        "e" if i <= m => Some(i - 1),
        "f" if i <= n => Some(m + i - 1),
        _ => None,
    }
}

fn symbol_name(idx: usize, m: usize) -> String {
    if idx < m {
        format!("e{}", idx + 1)
    } else {
        format!("f{}", idx - m + 1)
    }
}

fn expected_symbols(prefix: char, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let raw: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| {
        catalog_err(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    let mut names = BTreeSet::new();
    let mut entries = Vec::with_capacity(raw.len());
    for (pos, r) in raw.into_iter().enumerate() {
        let loc = format!("entry {} ({})", pos + 1, r.name);
        if !names.insert(r.name.clone()) {
            return Err(catalog_err(loc, "duplicate entry name"));
        }
        let (m, n) = (r.even.len(), r.odd.len());
        if r.even != expected_symbols('e', m) || r.odd != expected_symbols('f', n) {
            return Err(catalog_err(loc, "basis symbols must be e1..em and f1..fn"));
        }
        let var = r.family_param.clone();
        let mut alg = SuperAlgebra::<RatFun>::zero(m, n);
        let mut seen = BTreeSet::new();
        for (k, (lhs, rhs, value)) in r.products.iter().enumerate() {
            let ploc = format!("{loc}, product {} ({lhs}*{rhs})", k + 1);
            let i = symbol_index(lhs, m, n)
                .ok_or_else(|| catalog_err(&ploc, format!("unknown basis symbol {lhs:?}")))?;
            let j = symbol_index(rhs, m, n)
                .ok_or_else(|| catalog_err(&ploc, format!("unknown basis symbol {rhs:?}")))?;
            let canonical = match (i < m, j < m) {
                (true, true) => i <= j,
                (true, false) => true,
                (false, true) => false,
                (false, false) => i < j,
            };
            if !canonical {
                return Err(catalog_err(
                    &ploc,
                    "non-canonical product key (use e_i e_j with i <= j, e before f, f_i f_j with i < j)",
                ));
            }
            if !seen.insert((i, j)) {
                return Err(catalog_err(&ploc, "duplicate product key"));
            }
            let mut v = vec![RatFun::zero(); m + n];
            for (sym, coeff) in value {
                let t = symbol_index(sym, m, n)
                    .ok_or_else(|| catalog_err(&ploc, format!("unknown basis symbol {sym:?}")))?;
                let c = match &var {
                    None => RatFun::constant(parse_scalar(coeff).map_err(|e| catalog_err(&ploc, e.to_string()))?),
                    Some(g) => parse_ratfun(coeff, g).map_err(|e| catalog_err(&ploc, e.to_string()))?,
                };
                if var.is_some() && !c.is_polynomial() {
                    return Err(catalog_err(&ploc, format!("coefficient {coeff:?} is not a polynomial")));
                }
                v[t] = c;
            }
            alg.set_supercommutative(i, j, &v)
                .map_err(|e| catalog_err(&ploc, e.to_string()))?;
        }
        let algebra = match var {
            Some(g) => CatalogAlgebra::Family(ParamFamily::new(g, alg).map_err(|e| catalog_err(&loc, e.to_string()))?),
            None => CatalogAlgebra::Concrete(alg.map_field(|c| c.as_constant().expect("constant entries"))),
        };
        entries.push(CatalogEntry {
            name: r.name,
            algebra,
            associative: r.flags.associative,
            nilpotent: r.flags.nilpotent,
            expected_dim_aut: r.expected_dim_aut,
        });
    }
    Ok(Catalog { entries })
}

fn raw_products<F: Field>(a: &SuperAlgebra<F>, fmt_coeff: impl Fn(&F) -> String) -> Vec<(String, String, BTreeMap<String, String>)> {
    let (m, d) = (a.even_dim(), a.dim());
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            if i >= m && i == j {
                continue;
            }
            let v = a.mul_basis(i, j);
            let value: BTreeMap<String, String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (symbol_name(k, m), fmt_coeff(c)))
                .collect();
            if !value.is_empty() {
                out.push((symbol_name(i, m), symbol_name(j, m), value));
            }
        }
    }
    out
}

/// Serialize in the canonical on-disk form: one compact JSON object per line.
pub fn serialize_catalog(catalog: &Catalog) -> String {
    let lines: Vec<String> = catalog
        .entries
        .iter()
        .map(|e| {
            let (m, n, products, family_param) = match &e.algebra {
                CatalogAlgebra::Concrete(a) => (a.even_dim(), a.odd_dim(), raw_products(a, |c| c.to_string()), None),
                CatalogAlgebra::Family(f) => {
                    let g = f.param().to_string();
                    let prods = raw_products(f.generic(), |c| c.fmt_with(&g));
                    (f.generic().even_dim(), f.generic().odd_dim(), prods, Some(g))
                }
            };
            let raw = RawEntry {
                name: e.name.clone(),
                even: expected_symbols('e', m),
                odd: expected_symbols('f', n),
                products,
                flags: RawFlags {
                    associative: e.associative,
                    nilpotent: e.nilpotent,
                },
                expected_dim_aut: e.expected_dim_aut,
                family_param,
            };
            format!("  {}", serde_json::to_string(&raw).expect("catalog entries serialize"))
        })
        .collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub entry: String,
    pub check: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub lines: Vec<CheckLine>,
    pub algebras: usize,
    pub families: usize,
}

impl ValidationReport {
    pub fn failures(&self) -> Vec<&CheckLine> {
        self.lines.iter().filter(|l| !l.ok).collect()
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.failures() {
            writeln!(f, "FAIL {} {}: {}", l.entry, l.check, l.detail)?;
        }
        let fam = if self.families == 1 { "family" } else { "families" };
        if self.passed() {
            write!(f, "{} algebras + {} {fam}: all pass", self.algebras, self.families)
        } else {
            write!(
                f,
                "{} algebras + {} {fam}: {} failures",
                self.algebras,
                self.families,
                self.failures().len()
            )
        }
    }
}

/// Parameter values at which a family is checked numerically.
pub const FAMILY_SAMPLES: [i64; 3] = [2, 3, 5];

fn check_algebra<F: Field>(
    label: &str,
    a: &SuperAlgebra<F>,
    entry: &CatalogEntry,
    check_flags: bool,
) -> Vec<CheckLine> {
    let line = |check: &str, ok: bool, detail: String| CheckLine {
        entry: label.to_string(),
        check: check.to_string(),
        ok,
        detail,
    };
    let mut out = Vec::new();
    match a.check_supercommutativity() {
        Ok(()) => out.push(line("supercommutativity", true, String::new())),
        Err(v) => out.push(line("supercommutativity", false, v.to_string())),
    }
    match a.check_jordan_superidentity() {
        Ok(()) => out.push(line("jordan", true, String::new())),
        Err(v) => {
            let names: Vec<String> = v.tuple.iter().map(|&i| a.basis_name(i)).collect();
            let res: Vec<String> = v.residual.iter().map(ToString::to_string).collect();
            out.push(line(
                "jordan",
                false,
                format!("superidentity fails at ({}), residual [{}]", names.join(","), res.join(", ")),
            ));
        }
    }
    if check_flags {
        let assoc = a.is_associative();
        out.push(line(
            "associative",
            assoc == entry.associative,
            format!("stored {}, computed {}", entry.associative, assoc),
        ));
        let nil = a.is_nilpotent();
        out.push(line(
            "nilpotent",
            nil == entry.nilpotent,
            format!("stored {}, computed {}", entry.nilpotent, nil),
        ));
    }
    let dim = even_derivation_dim(a);
    out.push(line(
        "dim_aut",
        dim == entry.expected_dim_aut,
        format!("stored {}, computed {dim}", entry.expected_dim_aut),
    ));
    out
}

/// Recompute every derived column of every entry. Families are checked at
/// the sample parameter values and symbolically over the rational function
/// field in the parameter.
pub fn validate_catalog(catalog: &Catalog) -> ValidationReport {
    let mut report = ValidationReport::default();
    for entry in catalog.entries() {
        match &entry.algebra {
            CatalogAlgebra::Concrete(a) => {
                report.algebras += 1;
                report.lines.extend(check_algebra(&entry.name, a, entry, true));
            }
            CatalogAlgebra::Family(fam) => {
                report.families += 1;
                for v in FAMILY_SAMPLES {
                    let a = fam.specialize(&Scalar::from(v)).expect("nonzero sample");
                    let label = format!("{} at {}={v}", entry.name, fam.param());
                    report.lines.extend(check_algebra(&label, &a, entry, true));
                }
                let label = format!("{} over Q({})", entry.name, fam.param());
                report.lines.extend(check_algebra(&label, fam.generic(), entry, true));
            }
        }
    }
    report
}
