//! Degeneration certificates: explicit curves `g(t)` of basis changes whose
//! transformed structure constants have a limit at `t = 0`.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CatalogAlgebra};
use crate::error::{Error, Result};
use crate::exact::{parse_ratfun, Field, Poly, RatFun, Scalar};
use crate::linear::Matrix;
use crate::superalgebra::SuperAlgebra;

/// Name of the curve parameter in certificate files.
pub const CURVE_VAR: &str = "t";

/// A witness for `source -> target`. Column `j` of each matrix holds the
/// old-basis coordinates of the `j`-th new basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationCertificate {
    pub source: String,
    /// Substitution for the family parameter when the source is a family.
    pub gamma: Option<RatFun>,
    pub target: String,
    pub even_matrix: Matrix<RatFun>,
    pub odd_matrix: Matrix<RatFun>,
    pub note: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma: Option<String>,
    target: String,
    even_matrix: Vec<Vec<String>>,
    odd_matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn parse_matrix(rows: &[Vec<String>], what: &str) -> Result<Matrix<RatFun>> {
    let cols = rows.first().map_or(0, Vec::len);
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_ratfun(s, CURVE_VAR).map_err(|e| Error::Parse(format!("{what}: {e}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(cols, parsed).map_err(|e| Error::Parse(format!("{what}: {e}")))?;
    if m.rows() != m.cols() {
        return Err(Error::Parse(format!("{what} is {}x{}, not square", m.rows(), m.cols())));
    }
    Ok(m)
}

fn render_matrix(m: &Matrix<RatFun>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.fmt_with(CURVE_VAR)).collect())
        .collect()
}

impl DegenerationCertificate {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawCertificate = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let gamma = raw
            .gamma
            .as_deref()
            .map(|g| parse_ratfun(g, CURVE_VAR))
            .transpose()
            .map_err(|e| Error::Parse(format!("gamma: {e}")))?;
        Ok(DegenerationCertificate {
            source: raw.source,
            gamma,
            target: raw.target,
            even_matrix: parse_matrix(&raw.even_matrix, "even_matrix")?,
            odd_matrix: parse_matrix(&raw.odd_matrix, "odd_matrix")?,
            note: raw.note,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawCertificate {
            source: self.source.clone(),
            gamma: self.gamma.as_ref().map(|g| g.fmt_with(CURVE_VAR)),
            target: self.target.clone(),
            even_matrix: render_matrix(&self.even_matrix),
            odd_matrix: render_matrix(&self.odd_matrix),
            note: self.note.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("certificates serialize")
    }

    /// Read one certificate file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// The constant curve `g(t) = id`, certifying `A -> A`.
    pub fn identity(name: &str, m: usize, n: usize) -> Self {
        DegenerationCertificate {
            source: name.to_string(),
            gamma: None,
            target: name.to_string(),
            even_matrix: Matrix::identity(m),
            odd_matrix: Matrix::identity(n),
            note: Some("identity".into()),
        }
    }

    /// The curve `g(t) = t * id`, which multiplies every constant by `t`
    /// and so degenerates anything to the zero algebra `zero_name`.
    pub fn scaling(name: &str, zero_name: &str, m: usize, n: usize) -> Self {
        let t = RatFun::var();
        let scaled = |k: usize| {
            let mut out = Matrix::zeros(k, k);
            for i in 0..k {
                out[(i, i)] = t.clone();
            }
            out
        };
        DegenerationCertificate {
            source: name.to_string(),
            gamma: None,
            target: zero_name.to_string(),
            even_matrix: scaled(m),
            odd_matrix: scaled(n),
            note: Some("scaling".into()),
        }
    }
}

/// Load a certificate file, or every `*.json` file of a directory in file
/// name order.
pub fn load_certificates(path: &Path) -> Result<Vec<DegenerationCertificate>> {
    let meta = std::fs::metadata(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    if !meta.is_dir() {
        return Ok(vec![DegenerationCertificate::load(path)?]);
    }
    let read = std::fs::read_dir(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut files: Vec<PathBuf> = read
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files.iter().map(|p| DegenerationCertificate::load(p)).collect()
}

/// The source of a certificate as an algebra over `Q(t)`.
fn source_algebra(cert: &DegenerationCertificate, catalog: &Catalog) -> Result<SuperAlgebra<RatFun>> {
    let entry = catalog.get(&cert.source)?;
    match (&entry.algebra, &cert.gamma) {
        (CatalogAlgebra::Concrete(a), None) => Ok(a.to_ratfun()),
        (CatalogAlgebra::Concrete(_), Some(_)) => Err(Error::InvalidArgument(format!(
            "{} is not a family but the certificate substitutes gamma",
            cert.source
        ))),
        (CatalogAlgebra::Family(_), None) => Err(Error::InvalidArgument(format!(
            "{} is a family and the certificate has no gamma",
            cert.source
        ))),
        (CatalogAlgebra::Family(fam), Some(g)) => {
            if g.is_zero() {
                return Err(Error::FamilyDomain(g.fmt_with(CURVE_VAR)));
            }
            Ok(fam.at(g))
        }
    }
}

/// The structure constants of the source in the basis `g(t)`.
pub fn apply_curve(cert: &DegenerationCertificate, catalog: &Catalog) -> Result<SuperAlgebra<RatFun>> {
    let a = source_algebra(cert, catalog)?;
    if cert.even_matrix.determinant().is_zero() || cert.odd_matrix.determinant().is_zero() {
        return Err(Error::CurveNotInGroup);
    }
    a.transform(&cert.even_matrix, &cert.odd_matrix)
}

/// Evaluate every constant at `t = 0` and check the result is still a
/// Jordan superalgebra.
pub fn limit_at_zero(curve: &SuperAlgebra<RatFun>) -> Result<SuperAlgebra<Scalar>> {
    if let Some((label, v)) = curve.labelled_constants().into_iter().find(|(_, v)| v.has_pole_at_zero()) {
        return Err(Error::LimitPole(format!("{label} = {}", v.fmt_with(CURVE_VAR))));
    }
    let limit = curve.try_map_field(RatFun::eval_at_zero)?;
    if let Err(v) = limit.check_supercommutativity() {
        return Err(Error::LimitLeftVariety(v.to_string()));
    }
    if let Err(v) = limit.check_jordan_superidentity() {
        let names: Vec<String> = v.tuple.iter().map(|&i| limit.basis_name(i)).collect();
        return Err(Error::LimitLeftVariety(format!("superidentity fails at ({})", names.join(","))));
    }
    Ok(limit)
}

/// Outcome of checking one certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub source: String,
    pub target: String,
    pub passed: bool,
    /// First structure constant where the limit and the target differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS {} -> {}", self.source, self.target),
            Some(m) => write!(f, "FAIL {} -> {}: {m}", self.source, self.target),
        }
    }
}

/// First differing constant of two algebras of the same type.
fn first_difference(limit: &SuperAlgebra<Scalar>, target: &SuperAlgebra<Scalar>) -> Option<String> {
    if limit.even_dim() != target.even_dim() || limit.odd_dim() != target.odd_dim() {
        return Some(format!(
            "type ({},{}) against ({},{})",
            limit.even_dim(),
            limit.odd_dim(),
            target.even_dim(),
            target.odd_dim()
        ));
    }
    limit
        .labelled_constants()
        .into_iter()
        .zip(target.labelled_constants())
        .find(|((_, x), (_, y))| x != y)
        .map(|((label, x), (_, y))| format!("{label}: limit {x}, target {y}"))
}

/// Apply the curve, take the limit and compare it with the target's stored
/// constants on the nose.
pub fn verify_certificate(cert: &DegenerationCertificate, catalog: &Catalog) -> Result<Verification> {
    let target = catalog.algebra(&cert.target)?;
    let limit = limit_at_zero(&apply_curve(cert, catalog)?)?;
    let mismatch = first_difference(&limit, target);
    Ok(Verification {
        source: cert.source.clone(),
        target: cert.target.clone(),
        passed: mismatch.is_none(),
        mismatch,
    })
}

/// Outcome of checking a certificate whose source is a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub verification: Verification,
    pub gamma_nonconstant: bool,
    /// Whether the target's table equals some member at a nonzero value.
    pub target_in_family: bool,
    pub passed: bool,
}

/// Whether the polynomials all vanish at a common nonzero point of the
/// algebraic closure.
fn common_nonzero_root(polys: &[Poly]) -> bool {
    let g = polys.iter().fold(Poly::zero(), |acc, p| Poly::gcd(&acc, p));
    if g.is_zero() {
        return true;
    }
    let shifted: Vec<Scalar> = g.coeffs()[g.valuation()..].to_vec();
    Poly::new(shifted).degree().is_some_and(|d| d > 0)
}

/// Verify a family certificate and check that it really uses the varying
/// parameter: `gamma(t)` is nonconstant, or the target is not itself a
/// member of the family.
pub fn family_certificate_check(cert: &DegenerationCertificate, catalog: &Catalog) -> Result<FamilyCheck> {
    let fam = catalog
        .get(&cert.source)?
        .family()
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a family", cert.source)))?;
    let gamma = cert
        .gamma
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("family certificate without gamma".into()))?;
    let verification = verify_certificate(cert, catalog)?;
    let target = catalog.algebra(&cert.target)?;
    let differences: Vec<Poly> = fam
        .generic()
        .labelled_constants()
        .into_iter()
        .zip(target.labelled_constants())
        .map(|((_, p), (_, c))| p.num() - &Poly::constant(c.clone()))
        .collect();
    let target_in_family = common_nonzero_root(&differences);
    let gamma_nonconstant = gamma.as_constant().is_none();
    let passed = verification.passed && (gamma_nonconstant || !target_in_family);
    Ok(FamilyCheck {
        verification,
        gamma_nonconstant,
        target_in_family,
        passed,
    })
}
