use std::process::{Command, Output};

fn deltan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltan")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn classify_z6_zero() {
    let o = deltan(&["classify", "Z6", "(0)", "--delta", "d1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("quasi n-ideal: false (witness a=2, b=3)"), "{s}");
    for m in ["definition", "colon_criterion", "element_ideal", "ideal_pairs"] {
        assert!(s.contains(&format!("delta-n-ideal [{m}]: false")), "{s}");
    }
}

#[test]
fn classify_integers() {
    let o = deltan(&["classify", "ZZ", "(5)", "--delta", "d+((3))"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("delta-n-ideal [definition]: true"));
}

#[test]
fn ideals_lists_lattice() {
    let o = deltan(&["ideals", "Z4 x Z9"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("Z4 x Z9: 9 ideals"), "{s}");
    assert_eq!(s.lines().count(), 10);
}

#[test]
fn parse_errors_exit_2() {
    let o = deltan(&["ideals", "Z6 )"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column 4"), "{}", stderr(&o));
    assert_eq!(deltan(&["classify", "Z6", "(0", "--delta", "d1"]).status.code(), Some(2));
    assert_eq!(deltan(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn improper_ideal_is_rejected() {
    let o = deltan(&["classify", "Z4[x]/(x^3)", "(x+1)", "--delta", "d+((2,x))"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a proper ideal"), "{}", stderr(&o));
}

#[test]
fn explain_and_unknown_claim() {
    let o = deltan(&["explain", "thm-four-equivalents"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("anchor:"));
    assert_eq!(deltan(&["explain", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(deltan(&["verify", "--claims", "no-such-claim"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = deltan(&["verify"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains(", 0 failed"));
    let bad = deltan(&["verify", "--claims", "selftest-z6-all-n-ideals", "--witness-cap", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    let s = stdout(&bad);
    assert!(s.contains("witness: ring Z6, I=(0), a=2, b=3"), "{s}");
    assert_eq!(s.matches("witness:").count(), 1);
}

#[test]
fn verify_json_is_byte_stable() {
    let dir = std::env::temp_dir().join(format!("deltan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    for p in [&a, &b] {
        assert_eq!(deltan(&["verify", "--json", p.to_str().unwrap()]).status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
    let v: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["witness_cap"], 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_custom_corpus() {
    let dir = std::env::temp_dir().join(format!("deltan-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("corpus.txt");
    std::fs::write(&file, "# small\nZ6 ; d0 ; full\nZ8\n").unwrap();
    let o = deltan(&["verify", "--corpus", file.to_str().unwrap(), "--claims", "thm-four-equivalents,prop-sum"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("2 claims over 2 rings"), "{}", stdout(&o));
    std::fs::write(&file, "Z6 ; d9\n").unwrap();
    assert_eq!(deltan(&["verify", "--corpus", file.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
