//! One line per acceptance criterion, read literally. Runs without the test
//! harness so every line is printed; exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use deltan::verifier::{self, builtin_corpus, catalog, run_claims, ClaimReport, DEFAULT_WITNESS_CAP};
use deltan::{
    delta_n_spectrum, delta_n_witness, enumerate_ideals, idealization, is_delta_n_ideal, is_delta_primary,
    is_n_ideal, parse_ring, DeltaNMethod, Expansion, Ideal, Idealization, Module, ModuleSpec, Recipe, Ring,
    RingSpec,
};

/// Criterion 1: wall-clock ceiling for the full default verify run.
const SUITE_LIMIT: Duration = Duration::from_secs(60);
/// Criterion 3: primes up to this bound.
const PRIME_BOUND: u64 = 100;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn ring(text: &str) -> Ring {
    Ring::new(&parse_ring(text).unwrap()).unwrap()
}

fn catalog_of(r: &Ring) -> Vec<Expansion> {
    catalog(r).unwrap().iter().map(|x| Expansion::new(r, x).unwrap()).collect()
}

fn proper(r: &Ring) -> Vec<Ideal> {
    enumerate_ideals(r).unwrap().into_iter().filter(|i| i.is_proper()).collect()
}

fn is_dn(i: &Ideal, d: &Expansion) -> bool {
    is_delta_n_ideal(i, d, DeltaNMethod::Definition).unwrap()
}

fn nilradical(r: &Ring) -> Ideal {
    Ideal::zero(r).radical()
}

fn claim(reports: &[ClaimReport], id: &str) -> ClaimReport {
    reports.iter().find(|c| c.id == id).cloned().unwrap()
}

fn summary(c: &ClaimReport) -> String {
    format!(
        "{}: checked={} holds={} hypothesis_not_met={} failed={}",
        c.id, c.instances_checked, c.holds, c.hypothesis_not_met, c.failed
    )
}

fn corpus_rings() -> Vec<Ring> {
    builtin_corpus().entries.iter().map(|e| Ring::new(&e.ring).unwrap()).collect()
}

fn four_equivalence(reports: &[ClaimReport], elapsed: Duration) -> Outcome {
    let c = claim(reports, "thm-four-equivalents");
    outcome(
        c.failed == 0 && c.instances_checked > 0 && elapsed < SUITE_LIMIT,
        format!("{}; full verify {:.2?} (limit {:?})", summary(&c), elapsed, SUITE_LIMIT),
    )
}

fn z6_zero() -> Outcome {
    let r = ring("Z6");
    let zero = Ideal::zero(&r);
    let (two, three) = (r.int(2), r.int(3));
    let mut ok = true;
    let mut seen = Vec::new();
    for d in [Expansion::delta0(&r), Expansion::delta1(&r)] {
        let w = delta_n_witness(&zero, &d).unwrap();
        ok &= w == Some((two.clone(), three.clone()));
        seen.push(format!("{}: {:?}", d.recipe(), w.map(|(a, b)| format!("({a},{b})"))));
    }
    outcome(ok, seen.join(", "))
}

fn integer_example() -> Outcome {
    let zz = Ring::integers();
    let (d0, d1) = (Expansion::delta0(&zz), Expansion::delta1(&zz));
    let primes: Vec<u64> = (2..=PRIME_BOUND).filter(|&n| (2..n).all(|k| n % k != 0)).collect();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for &q in &primes {
        let dq = Expansion::delta_plus(&Ideal::integer(q)).unwrap();
        for &p in primes.iter().filter(|&&p| p != q) {
            let i = Ideal::integer(p);
            pairs += 1;
            if !(is_dn(&i, &dq) && !is_dn(&i, &d0) && !is_dn(&i, &d1)) {
                bad.push((p, q));
            }
        }
    }
    outcome(bad.is_empty(), format!("{pairs} pairs (p,q), failures {bad:?}"))
}

/// The four conditions of the every-ideal theorem, from public operations.
fn every_ideal_conditions(r: &Ring, d: &Expansion) -> [bool; 4] {
    let ideals = proper(r);
    let nil = nilradical(r);
    let principal = r
        .elements()
        .unwrap()
        .iter()
        .map(|a| Ideal::principal(a).unwrap())
        .filter(|i| i.is_proper())
        .all(|i| is_dn(&i, d));
    let all = ideals.iter().all(|i| is_dn(i, d));
    let primes: Vec<&Ideal> = ideals.iter().filter(|i| i.classify().is_prime).collect();
    let unique_prime = primes.len() == 1 && *primes[0] == nil;
    let class = r.classify();
    let quasi_local = class.is_quasi_local && class.maximal_ideal.as_ref() == Some(&nil);
    [principal, all, unique_prime, quasi_local]
}

fn every_ideal() -> Outcome {
    let mut bad = Vec::new();
    for text in ["Z4", "Z8", "Z9", "Z27", "Z32", "Z2[x]/(x^3)"] {
        let r = ring(text);
        for d in catalog_of(&r) {
            let c = every_ideal_conditions(&r, &d);
            if c != [true; 4] {
                bad.push(format!("{text} {} {c:?}", d.recipe()));
            }
        }
    }
    for text in ["Z6", "Z10", "Z12", "Z2 x Z2"] {
        let r = ring(text);
        for d in catalog_of(&r) {
            let c = every_ideal_conditions(&r, &d);
            if c != [false; 4] {
                bad.push(format!("{text} {} {c:?}", d.recipe()));
            }
        }
    }
    let mut mixed = 0;
    for r in corpus_rings() {
        for d in catalog_of(&r) {
            let c = every_ideal_conditions(&r, &d);
            if c.iter().any(|&x| x != c[0]) {
                mixed += 1;
                if bad.len() < 8 {
                    bad.push(format!("mixed: {r} {} {c:?}", d.recipe()));
                }
            }
        }
    }
    bad.truncate(8);
    outcome(bad.is_empty(), format!("{mixed} mixed outcomes; first: {bad:?}"))
}

fn existence() -> Outcome {
    let mut broken = Vec::new();
    let mut gated = 0;
    for entry in builtin_corpus().entries {
        let r = Ring::new(&entry.ring).unwrap();
        let recipes = if entry.expansions.is_empty() { catalog(&r).unwrap() } else { entry.expansions };
        let nil = nilradical(&r);
        for x in recipes {
            let d = Expansion::new(&r, &x).unwrap();
            if !d.profile().unwrap().colon_condition.holds {
                continue;
            }
            gated += 1;
            let some = !delta_n_spectrum(&r, &d).unwrap().all.is_empty();
            let prime = nil.classify().is_prime;
            let primary = is_delta_primary(&nil, &d).unwrap();
            if !(some == prime && prime == primary) {
                broken.push(format!("{r} {}: [{some}, {prime}, {primary}]", d.recipe()));
            }
        }
    }
    let z12 = ring("Z12");
    let z12_empty = delta_n_spectrum(&z12, &Expansion::delta0(&z12)).unwrap().all.is_empty();
    let z8 = ring("Z8");
    let s8 = delta_n_spectrum(&z8, &Expansion::delta0(&z8)).unwrap();
    let want: Vec<Ideal> = [0, 4, 2].iter().map(|&g| Ideal::principal(&z8.int(g)).unwrap()).collect();
    let z8_ok = s8.all.len() == 3
        && want.iter().all(|w| s8.all.contains(w))
        && s8.maximal_members == [nilradical(&z8)]
        && nilradical(&z8) == want[2];
    let n = broken.len();
    broken.truncate(4);
    outcome(
        broken.is_empty() && z12_empty && z8_ok,
        format!(
            "{gated} gated instances, {n} break the equivalence (first {broken:?}); Z12 delta0 spectrum empty: {z12_empty}; Z8 delta0 spectrum {{0,(4),(2)}} with maximal (2): {z8_ok}"
        ),
    )
}

fn product_obstruction() -> Outcome {
    let mut nonempty = Vec::new();
    let mut scanned = 0;
    for text in ["Z4 x Z9", "Z2 x Z2", "Z2 x Z4"] {
        let r = ring(text);
        let RingSpec::Product(a, b) = r.spec().clone() else { unreachable!() };
        let (ra, rb) = (Ring::new(&a).unwrap(), Ring::new(&b).unwrap());
        for x in catalog(&ra).unwrap() {
            for y in catalog(&rb).unwrap() {
                let d = Expansion::new(&r, &Recipe::Product(Box::new(x.clone()), Box::new(y))).unwrap();
                let ideals = proper(&r);
                if ideals.iter().all(|i| !d.apply(i).unwrap().is_proper()) {
                    continue;
                }
                scanned += 1;
                let s = delta_n_spectrum(&r, &d).unwrap();
                if !s.all.is_empty() {
                    nonempty.push(format!("{text} {}: {}", d.recipe(), s.all[0]));
                }
            }
        }
    }
    let n = nonempty.len();
    nonempty.truncate(4);
    outcome(nonempty.is_empty(), format!("{scanned} expansions, {n} with non-empty spectrum (first {nonempty:?})"))
}

fn idealization_equivalence() -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let z4 = ring("Z4");
    let z8 = ring("Z8");
    let cases = [
        (z4.clone(), Module::new(&z4, &ModuleSpec::Regular).unwrap()),
        (z8.clone(), Module::new(&z8, &ModuleSpec::QuotientModule(vec![deltan::ElemExpr::int(4)])).unwrap()),
    ];
    for (base, m) in cases {
        let id: Idealization = idealization(&base, &m).unwrap();
        for d in catalog_of(&base) {
            let up = d.derive_idealization(&m).unwrap();
            for (i, n) in id.homogeneous_pairs().unwrap() {
                if !i.is_proper() {
                    continue;
                }
                checked += 1;
                let k = id.homogeneous_ideal(&i, &n).unwrap();
                if is_dn(&i, &d) != is_dn(&k, &up) {
                    mismatches.push(format!("{} {} {i}", id.ring(), d.recipe()));
                }
            }
        }
    }
    outcome(mismatches.is_empty() && checked > 0, format!("{checked} (I, N, delta) triples, mismatches {mismatches:?}"))
}

fn transfer(reports: &[ClaimReport]) -> Outcome {
    let ids = ["cor-quotient-1", "cor-quotient-2", "cor-quotient-3", "prop-loc-extension", "prop-loc-contraction"];
    let cs: Vec<ClaimReport> = ids.iter().map(|id| claim(reports, id)).collect();
    let ok = cs.iter().all(|c| c.failed == 0 && c.holds + c.hypothesis_not_met + c.failed == c.instances_checked);
    let detail: Vec<String> = cs.iter().map(summary).collect();
    outcome(ok, detail.join("; "))
}

fn von_neumann(reports: &[ClaimReport]) -> Outcome {
    let c = claim(reports, "thm-von-neumann-field");
    let r = ring("Z2 x Z2");
    let class = r.classify();
    let fixed: Vec<Expansion> = catalog_of(&r)
        .into_iter()
        .filter(|d| d.profile().unwrap().zero_fixed.holds)
        .collect();
    let zero = Ideal::zero(&r);
    let right_fails = fixed.iter().all(|d| !is_dn(&zero, d));
    outcome(
        c.failed == 0 && class.is_von_neumann_regular && !class.is_field && !fixed.is_empty() && right_fails,
        format!("{}; Z2 x Z2 regular, not a field, {{0}} not delta-n for all {} zero_fixed delta: {right_fails}", summary(&c), fixed.len()),
    )
}

fn e3_audit(reports: &[ClaimReport]) -> Outcome {
    let c = claim(reports, "example-e3-audit");
    let r = ring("Z4[x]/(x^3)");
    let j = Ideal::principal(&r.parse_element("x+1").unwrap()).unwrap();
    let flagged = c.notes.iter().any(|n| n.contains("whole ring"));
    outcome(
        c.failed == 0 && !j.is_proper() && flagged,
        format!("{}; (x+1) = R: {}; flagged: {flagged}", summary(&c), !j.is_proper()),
    )
}

fn oracles() -> Outcome {
    let rings = common::small_rings();
    let bad: Vec<String> = rings
        .iter()
        .filter(|r| !(common::enumeration_matches(r) && common::operators_match(r)))
        .map(|r| r.to_string())
        .collect();
    outcome(bad.is_empty(), format!("{} rings with at most 16 elements, mismatches {bad:?}", rings.len()))
}

fn zero_divisors(reports: &[ClaimReport]) -> Outcome {
    let c = claim(reports, "prop-zero-divisor-criterion");
    outcome(c.failed == 0 && c.holds > 0, summary(&c))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = verifier::run(&builtin_corpus(), None, DEFAULT_WITNESS_CAP).unwrap();
    let elapsed = start.elapsed();
    let instances = builtin_corpus().bind().unwrap();
    let extra = run_claims(&instances, None, DEFAULT_WITNESS_CAP).unwrap();
    assert_eq!(report.claims, extra, "claim reports differ between runs");
    let claims = &report.claims;
    let _ = is_n_ideal;

    let results = [
        ("1 four-way equivalence", four_equivalence(claims, elapsed)),
        ("2 Z6 zero ideal", z6_zero()),
        ("3 integer delta_plus example", integer_example()),
        ("4 every-ideal equivalence", every_ideal()),
        ("5 existence equivalence", existence()),
        ("6 product obstruction", product_obstruction()),
        ("7 idealization equivalence", idealization_equivalence()),
        ("8 quotient and localization transfer", transfer(claims)),
        ("9 von Neumann regular equivalence", von_neumann(claims)),
        ("10 Z4[x]/(x^3) example audit", e3_audit(claims)),
        ("11 oracle equivalence", oracles()),
        ("12 zero-divisor criterion", zero_divisors(claims)),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
