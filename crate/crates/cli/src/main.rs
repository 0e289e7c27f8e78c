use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jsuper::catalog::{validate_catalog, Catalog, CatalogAlgebra, CatalogEntry};
use jsuper::cohomology::h2_report;
use jsuper::degeneration::{
    catalog_profiles_with, component_report, family_certificate_check, hasse, load_certificates, scaling_certificates,
    separate_profiles, separation_sweep, ComponentClaims, DegenerationCertificate, Dim2Poset, Hasse, InvariantProfile,
    SeparateOptions, family_profile, profile,
};
use jsuper::derivation::even_derivation_dim;
use jsuper::Error;

#[derive(Parser)]
#[command(name = "jsuper", version, about = "Exact computations on the Jordan superalgebras of type (2,2)")]
struct Cli {
    /// Catalog file; the built-in catalog when absent.
    #[arg(long, global = true, env = "JSUPER_CATALOG")]
    catalog: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for per-entry computations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every derived column of the catalog.
    Validate {
        /// Catalog file to validate instead of the configured one.
        file: Option<PathBuf>,
    },
    /// Compare dim Aut, computed as the dimension of even derivations, with
    /// the stored values.
    Autdim {
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Second cohomology with coefficients in the algebra.
    H2 {
        #[arg(long)]
        algebra: Option<String>,
        /// Report only the grading-preserving variant.
        #[arg(long)]
        even: bool,
    },
    /// Degeneration certificates and obstructions.
    Degen {
        #[command(subcommand)]
        command: DegenCommand,
    },
    /// The degeneration order on the catalog as a DOT graph.
    Hasse {
        #[arg(long)]
        certs: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Orbit closures of the claimed components and of the associative and
    /// nilpotent subvarieties.
    Components {
        #[arg(long)]
        certs: PathBuf,
        /// Claimed component lists; the built-in ones when absent.
        #[arg(long)]
        claims: Option<PathBuf>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Use only the standard necessary conditions for separation.
    #[arg(long)]
    strict: bool,
    /// Do not add the scaling certificates to the zero algebra.
    #[arg(long)]
    no_scaling: bool,
}

#[derive(Subcommand)]
enum DegenCommand {
    /// Verify a certificate file or every certificate in a directory.
    Verify { path: PathBuf },
    /// List the necessary conditions for A -> B that fail.
    Separate {
        source: String,
        target: String,
        #[arg(long)]
        strict: bool,
    },
}

/// Why a run did not succeed, mapped to the exit status.
enum Failure {
    /// A requested check failed.
    Check,
    /// Bad input: missing file, parse error, unknown algebra.
    Input(String),
    /// A pair is both established and refuted.
    Soundness(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Soundness(m) => Failure::Soundness(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Soundness(m)) => {
            eprintln!("SOUNDNESS VIOLATION: {m}");
            ExitCode::from(3)
        }
    }
}

fn load_catalog(path: Option<&Path>) -> Result<Catalog, Failure> {
    match path {
        Some(p) => Ok(Catalog::load(p)?),
        None => Ok(Catalog::builtin()),
    }
}

fn select<'a>(catalog: &'a Catalog, selector: Option<&str>) -> Result<Vec<&'a CatalogEntry>, Failure> {
    match selector {
        None => Ok(catalog.entries().iter().collect()),
        Some(s) => Ok(vec![catalog.resolve(s)?]),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn check(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: &Cli) -> Outcome {
    let jobs = cli.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    match &cli.command {
        Command::Validate { file } => {
            let catalog = load_catalog(file.as_deref().or(cli.catalog.as_deref()))?;
            let report = validate_catalog(&catalog);
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&report).expect("report serializes")),
                Format::Text => println!("{report}"),
            }
            check(report.passed())
        }
        Command::Autdim { algebra } => {
            let catalog = load_catalog(cli.catalog.as_deref())?;
            let mut rows = Vec::new();
            for e in select(&catalog, algebra.as_deref())? {
                let dim = match &e.algebra {
                    CatalogAlgebra::Concrete(a) => even_derivation_dim(a),
                    CatalogAlgebra::Family(f) => even_derivation_dim(f.generic()),
                };
                rows.push((e.name.clone(), dim, e.expected_dim_aut));
            }
            match cli.format {
                Format::Json => print_json(&Value::Array(
                    rows.iter()
                        .map(|(n, d, x)| json!({"algebra": n, "dimAut": d, "expected": x, "ok": d == x}))
                        .collect(),
                )),
                Format::Text => {
                    for (n, d, x) in &rows {
                        let mark = if d == x { "ok" } else { "MISMATCH" };
                        println!("{n}\tdim Aut = {d}\tstored {x}\t{mark}");
                    }
                }
            }
            check(rows.iter().all(|(_, d, x)| d == x))
        }
        Command::H2 { algebra, even } => {
            let catalog = load_catalog(cli.catalog.as_deref())?;
            let mut reports = Vec::new();
            for e in select(&catalog, algebra.as_deref())? {
                let r = match &e.algebra {
                    CatalogAlgebra::Concrete(a) => h2_report(&e.name, a),
                    CatalogAlgebra::Family(f) => h2_report(&e.name, f.generic()),
                };
                let mut v = serde_json::to_value(&r).expect("report serializes");
                if *even {
                    if let Value::Object(map) = &mut v {
                        map.retain(|k, _| k == "algebra" || k.ends_with("even"));
                    }
                }
                reports.push(v);
            }
            match cli.format {
                Format::Json => print_json(&Value::Array(reports)),
                Format::Text => {
                    for r in &reports {
                        println!("{}", serde_json::to_string(r).expect("JSON values serialize"));
                    }
                }
            }
            Ok(())
        }
        Command::Degen { command } => {
            let catalog = load_catalog(cli.catalog.as_deref())?;
            match command {
                DegenCommand::Verify { path } => verify(&catalog, path, cli.format),
                DegenCommand::Separate { source, target, strict } => {
                    let (a, b) = (catalog.resolve(source)?, catalog.resolve(target)?);
                    if b.is_family() {
                        return Err(Failure::Input(format!("{} is a family; targets must be single algebras", b.name)));
                    }
                    let opts = if *strict { SeparateOptions::strict() } else { SeparateOptions::default() };
                    let obs = if a.name == b.name {
                        Vec::new()
                    } else {
                        separate_profiles(&entry_profile(a), &entry_profile(b), &Dim2Poset::builtin(), true, opts)
                    };
                    match cli.format {
                        Format::Json => print_json(&json!({
                            "source": a.name, "target": b.name, "obstructions": obs,
                        })),
                        Format::Text => {
                            if obs.is_empty() {
                                println!("{} -> {}: no obstruction found", a.name, b.name);
                            }
                            for o in &obs {
                                println!("{} -> {}: {o}", a.name, b.name);
                            }
                        }
                    }
                    check(!obs.is_empty())
                }
            }
        }
        Command::Hasse { certs, out, sweep } => {
            let catalog = load_catalog(cli.catalog.as_deref())?;
            let (h, failed) = build_hasse(&catalog, certs, sweep, jobs)?;
            std::fs::write(out, h.to_dot(&catalog)).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            let unknown = h.unknown(&catalog);
            let established = h.established().filter(|(a, b)| a != b).count();
            match cli.format {
                Format::Json => print_json(&json!({
                    "established": established,
                    "covering": h.covering(),
                    "unknown": unknown,
                    "failedCertificates": failed,
                })),
                Format::Text => {
                    println!(
                        "{established} established pairs, {} covering edges, {} unknown pairs; wrote {}",
                        h.covering().len(),
                        unknown.len(),
                        out.display()
                    );
                    for (a, b) in &unknown {
                        println!("unknown {a} -> {b}");
                    }
                    for f in &failed {
                        println!("{f}");
                    }
                }
            }
            check(failed.is_empty())
        }
        Command::Components { certs, claims, sweep } => {
            let catalog = load_catalog(cli.catalog.as_deref())?;
            let claims = match claims {
                Some(p) => {
                    let text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                    ComponentClaims::parse(&text)?
                }
                None => ComponentClaims::builtin(),
            };
            let (h, failed) = build_hasse(&catalog, certs, sweep, jobs)?;
            let report = component_report(&catalog, &h, &claims);
            let open: Vec<Value> = claims
                .open_pairs()
                .iter()
                .map(|(a, b)| json!({"source": a, "target": b, "status": h.status(a, b)}))
                .collect();
            match cli.format {
                Format::Json => print_json(&json!({
                    "report": report,
                    "open": open,
                    "failedCertificates": failed,
                })),
                Format::Text => {
                    print!("{}", report.to_text());
                    for (a, b) in claims.open_pairs() {
                        println!("open {a} -> {b}: {:?}", h.status(&a, &b));
                    }
                    for f in &failed {
                        println!("{f}");
                    }
                }
            }
            check(
                failed.is_empty()
                    && report.contradictions().is_empty()
                    && report.associative.maximal_matches_claim()
                    && report.nilpotent.maximal_matches_claim(),
            )
        }
    }
}

fn verify(catalog: &Catalog, path: &Path, format: Format) -> Outcome {
    let certs = load_certificates(path)?;
    let mut rows = Vec::new();
    for cert in &certs {
        let is_family = catalog.get(&cert.source).is_ok_and(CatalogEntry::is_family);
        let row = if is_family {
            family_certificate_check(cert, catalog).map(|c| {
                let mut v = serde_json::to_value(&c.verification).expect("verification serializes");
                v["passed"] = json!(c.passed);
                v["gammaNonconstant"] = json!(c.gamma_nonconstant);
                v["targetInFamily"] = json!(c.target_in_family);
                (c.passed, v, c.verification.to_string())
            })
        } else {
            jsuper::degeneration::verify_certificate(cert, catalog)
                .map(|v| (v.passed, serde_json::to_value(&v).expect("verification serializes"), v.to_string()))
        };
        match row {
            Ok(r) => rows.push(r),
            Err(e) => {
                let msg = format!("FAIL {} -> {}: {e}", cert.source, cert.target);
                rows.push((false, json!({"source": cert.source, "target": cert.target, "passed": false, "error": e.to_string()}), msg));
            }
        }
    }
    match format {
        Format::Json => print_json(&Value::Array(rows.iter().map(|r| r.1.clone()).collect())),
        Format::Text => {
            for r in &rows {
                println!("{}", r.2);
            }
            let passed = rows.iter().filter(|r| r.0).count();
            println!("{passed} of {} certificates verified", rows.len());
        }
    }
    check(rows.iter().all(|r| r.0))
}

/// Verify the certificates, sweep all pairs for obstructions and combine.
/// Returns the order and one line per certificate that did not verify.
fn build_hasse(catalog: &Catalog, dir: &Path, sweep: &SweepArgs, jobs: usize) -> Result<(Hasse, Vec<String>), Failure> {
    let mut certs: Vec<DegenerationCertificate> = load_certificates(dir)?;
    if !sweep.no_scaling {
        certs.extend(scaling_certificates(catalog));
    }
    let profiles = catalog_profiles_with(catalog, jobs);
    let opts = if sweep.strict { SeparateOptions::strict() } else { SeparateOptions::default() };
    let seps = separation_sweep(catalog, &profiles, &Dim2Poset::builtin(), opts);
    let h = hasse(&certs, &seps, catalog)?;
    let mut failed: Vec<String> = h
        .verifications
        .iter()
        .filter(|v| !v.passed)
        .map(ToString::to_string)
        .collect();
    failed.extend(h.errors.iter().map(|(a, b, e)| format!("FAIL {a} -> {b}: {e}")));
    Ok((h, failed))
}

fn entry_profile(e: &CatalogEntry) -> InvariantProfile {
    match &e.algebra {
        CatalogAlgebra::Concrete(a) => profile(a),
        CatalogAlgebra::Family(f) => family_profile(f),
    }
}
