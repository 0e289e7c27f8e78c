use std::path::PathBuf;
use std::process::{Command, Output};

use jsuper::catalog::BUILTIN_CATALOG;
use serde_json::Value;

fn jsuper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jsuper"))
        .args(args)
        .env_remove("JSUPER_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn certs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/certs")
}

/// The shipped catalog restricted to the named entries, one per line.
fn sub_catalog(names: &[&str]) -> String {
    let lines: Vec<&str> = BUILTIN_CATALOG
        .lines()
        .filter(|l| names.iter().any(|n| l.contains(&format!("\"name\":\"{n}\""))))
        .map(|l| l.trim_end_matches(','))
        .collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}

#[test]
fn validate_builtin_catalog() {
    let o = jsuper(&["validate"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("72 algebras + 1 family: all pass"), "{}", stdout(&o));
}

#[test]
fn missing_or_malformed_input_exits_2() {
    assert_eq!(jsuper(&["validate", "/nonexistent/catalog.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "[{\"name\": 1}]").unwrap();
    assert_eq!(jsuper(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(jsuper(&["autdim", "--algebra", "99"]).status.code(), Some(2));
}

#[test]
fn autdim_anchor() {
    let o = jsuper(&["--format", "json", "autdim", "--algebra", "72"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["dimAut"], 8);
    assert_eq!(v[0]["ok"], true);
}

#[test]
fn h2_of_the_rigid_example() {
    let o = jsuper(&["--format", "json", "h2", "--algebra", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v[0];
    assert_eq!(r["algebra"], "(2,2)_8");
    assert_eq!(r["dimZ2"], 12);
    assert!(r["dimH2"].as_u64().unwrap() >= 1);
    assert_eq!(r["rigidByH2"], false);
    assert_eq!(
        r["dimH2"].as_u64().unwrap(),
        r["dimZ2"].as_u64().unwrap() - r["dimB2"].as_u64().unwrap()
    );
}

#[test]
fn separate_exit_codes() {
    let o = jsuper(&["degen", "separate", "50", "47"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(ii)"), "{}", stdout(&o));
    let o = jsuper(&["degen", "separate", "3", "72"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no obstruction"));
}

#[test]
fn verify_shipped_certificates() {
    let o = jsuper(&["degen", "verify", certs_dir().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let n = std::fs::read_dir(certs_dir()).unwrap().count();
    assert!(stdout(&o).contains(&format!("{n} of {n} certificates verified")));
}

#[test]
fn verify_reports_a_wrong_target() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(certs_dir().join("D-07.json")).unwrap().replace("(2,2)_7", "(2,2)_6");
    std::fs::write(dir.path().join("wrong.json"), text).unwrap();
    let o = jsuper(&["degen", "verify", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL D_gamma -> (2,2)_6"), "{}", stdout(&o));
}

#[test]
fn catalog_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("small.json");
    std::fs::write(&path, sub_catalog(&["(2,2)_3", "(2,2)_72"])).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_jsuper"))
        .args(["--format", "json", "autdim"])
        .env("JSUPER_CATALOG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn identical_tables_under_two_names_are_a_soundness_violation() {
    // Distinct entries are taken to be non-isomorphic, so a certificate
    // between two copies of one table contradicts the sweep.
    let dir = tempfile::tempdir().unwrap();
    let copy = sub_catalog(&["(2,2)_3"]).replace("(2,2)_3", "(2,2)_99");
    let text = sub_catalog(&["(2,2)_3", "(2,2)_72"]).replacen("\n]", &format!(",\n{}", &copy[2..]), 1);
    let catalog = dir.path().join("dup.json");
    std::fs::write(&catalog, text).unwrap();
    let certs = dir.path().join("certs");
    std::fs::create_dir(&certs).unwrap();
    std::fs::write(
        certs.join("03-99.json"),
        r#"{"source":"(2,2)_3","target":"(2,2)_99","even_matrix":[["1","0"],["0","1"]],"odd_matrix":[["1","0"],["0","1"]]}"#,
    )
    .unwrap();
    let out = dir.path().join("order.dot");
    let o = jsuper(&[
        "--catalog",
        catalog.to_str().unwrap(),
        "hasse",
        "--certs",
        certs.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn hasse_is_independent_of_the_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        let out = dir.path().join(format!("order-{jobs}.dot"));
        let o = jsuper(&[
            "--format",
            "json",
            "--jobs",
            jobs,
            "hasse",
            "--certs",
            certs_dir().to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        (o.stdout, std::fs::read_to_string(out).unwrap())
    };
    let (json1, dot1) = run("1");
    let (json4, dot4) = run("4");
    assert_eq!(json1, json4);
    assert_eq!(dot1, dot4);
    assert!(dot1.contains("\"(2,2)_3\" -> \"(2,2)_2\" [style=solid]"));
}

#[test]
fn components_report_the_refuted_membership() {
    let o = jsuper(&["components", "--certs", certs_dir().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("CONTRADICTIONS: 1"), "{text}");
    assert!(text.contains("(2,2)_5 -> (2,2)_41"), "{text}");
    assert!(text.contains("maximal (2,2)_47 (2,2)_50 (2,2)_51"), "{text}");
}
