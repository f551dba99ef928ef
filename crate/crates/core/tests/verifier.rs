use std::collections::HashSet;

use deltan::verifier::{
    builtin_corpus, explain, find_counterexample, registry, run, run_claims, ClaimKind, Corpus, DEFAULT_WITNESS_CAP,
};
use deltan::Error;

#[test]
fn registry_ids_are_unique_and_anchored() {
    let paper = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md"))
        .unwrap()
        .replace("\r\n", "\n");
    let mut ids = HashSet::new();
    for c in registry() {
        assert!(ids.insert(c.id), "duplicate {}", c.id);
        assert!(paper.contains(c.anchor), "{}: anchor not found verbatim", c.id);
        assert!(c.per_instance() || c.global(), "{} checks nothing", c.id);
    }
    assert!(registry().len() >= 50);
}

#[test]
fn default_run_is_clean_and_counts_add_up() {
    let report = run(&builtin_corpus(), None, DEFAULT_WITNESS_CAP).unwrap();
    assert_eq!(report.failed_claims(), 0, "{}", report.to_text());
    for c in &report.claims {
        assert_eq!(c.holds + c.hypothesis_not_met + c.failed, c.instances_checked, "{}", c.id);
        assert!(c.instances_checked > 0, "{}", c.id);
    }
    let selftests = registry().iter().filter(|c| c.kind == ClaimKind::SelfTest).count();
    assert_eq!(report.claims.len(), registry().len() - selftests);
    let o = report.observations.as_ref().unwrap();
    assert_eq!(o.delta_n_not_n_ideal.count, 0);
    assert!(o.nonhomogeneous_ideals.count > 0);
}

#[test]
fn selftests_produce_witnesses() {
    let instances = builtin_corpus().bind().unwrap();
    for c in registry().iter().filter(|c| c.kind == ClaimKind::SelfTest) {
        let w = find_counterexample(c.id, &instances).unwrap();
        assert!(w.is_some(), "{} found no witness", c.id);
    }
    let w = find_counterexample("selftest-z6-all-n-ideals", &instances).unwrap().unwrap();
    assert_eq!(w.to_string(), "ring Z6, I=(0), a=2, b=3");
}

#[test]
fn witness_cap_bounds_failures() {
    let instances = builtin_corpus().bind().unwrap();
    let ids = vec!["selftest-primes-are-delta-n".to_string()];
    for cap in [0, 1, 3] {
        let r = run_claims(&instances, Some(&ids), cap).unwrap();
        assert!(r[0].failed > 3);
        assert_eq!(r[0].failures.len(), cap);
    }
}

#[test]
fn parallel_runs_agree() {
    let instances = builtin_corpus().bind().unwrap();
    let a = run_claims(&instances, None, DEFAULT_WITNESS_CAP).unwrap();
    let b = run_claims(&instances, None, DEFAULT_WITNESS_CAP).unwrap();
    assert_eq!(a, b);
}

#[test]
fn unknown_claims_are_errors() {
    assert!(matches!(explain("nope"), Err(Error::UnknownClaim(_))));
    let ids = vec!["nope".to_string()];
    assert!(matches!(run(&builtin_corpus(), Some(&ids), 1), Err(Error::UnknownClaim(_))));
    assert!(explain("prop-sum").unwrap().contains("kind: theorem"));
}

#[test]
fn corpus_text() {
    let c = Corpus::from_text("# comment\nZ6 ; d0 ; d1 o d+((2))\n\nZ2 x Z2\n").unwrap();
    assert_eq!(c.entries.len(), 2);
    assert_eq!(c.entries[0].expansions.len(), 2);
    assert!(c.entries[1].expansions.len() > 3, "catalog fills a bare ring");
    assert!(c.instance_count() > 2);
    assert!(Corpus::from_text("Z6 ; nonsense").is_err());
}
