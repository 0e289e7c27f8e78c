use std::path::Path;

use jsuper::catalog::Catalog;
use jsuper::degeneration::*;

fn order() -> (Catalog, Hasse) {
    let cat = Catalog::builtin();
    let mut certs = load_certificates(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/certs")).unwrap();
    certs.extend(scaling_certificates(&cat));
    let seps = separation_sweep(&cat, &catalog_profiles(&cat), &Dim2Poset::builtin(), SeparateOptions::default());
    let h = hasse(&certs, &seps, &cat).unwrap();
    (cat, h)
}

#[test]
fn order_properties() {
    let (cat, h) = order();
    assert!(h.verifications.iter().all(|v| v.passed));
    assert!(h.errors.is_empty());

    // Every entry reaches the zero algebra and nothing refutes it.
    for e in cat.entries() {
        if e.name != "(2,2)_72" {
            assert_eq!(h.status(&e.name, "(2,2)_72"), PairStatus::Established, "{}", e.name);
            assert!(h.obstructions(&e.name, "(2,2)_72").is_none());
        }
    }

    // The established relation is reflexive and transitive.
    let est: std::collections::BTreeSet<(&str, &str)> = h.established().collect();
    for e in cat.entries() {
        assert!(est.contains(&(e.name.as_str(), e.name.as_str())));
    }
    for &(a, b) in &est {
        for &(b2, c) in &est {
            if b == b2 {
                assert!(est.contains(&(a, c)), "{a} -> {b} -> {c}");
            }
        }
    }

    // The covering edges generate the established relation.
    let mut closure: std::collections::BTreeSet<(&str, &str)> = h.covering().into_iter().collect();
    closure.extend(cat.entries().iter().map(|e| (e.name.as_str(), e.name.as_str())));
    loop {
        let next: Vec<(&str, &str)> = closure
            .iter()
            .flat_map(|&(a, b)| closure.iter().filter(move |&&(b2, _)| b2 == b).map(move |&(_, c)| (a, c)))
            .collect();
        let before = closure.len();
        closure.extend(next);
        if closure.len() == before {
            break;
        }
    }
    assert_eq!(closure, est);

    let claims = ComponentClaims::builtin();
    let report = component_report(&cat, &h, &claims);
    assert_eq!(report.status("(2,2)_52", "(2,2)_72"), Some(PairStatus::Established));
    let mut nil = report.nilpotent.maximal.clone();
    nil.sort();
    assert_eq!(nil, ["(2,2)_47", "(2,2)_50", "(2,2)_51"]);
    assert_eq!(report.associative.maximal.len(), 6);
    assert!(report.associative.maximal_matches_claim());
}

#[test]
fn implied_members_follow_listed_closures() {
    let claims = ComponentClaims::builtin();
    let implied = claims.implied_members("(2,2)_20");
    assert!(implied.contains("(2,2)_68") && implied.contains("(2,2)_69"), "{implied:?}");
    assert!(claims.implied_members("(2,2)_72").is_empty());
}
