use linksgould::arith::Laurent;
use linksgould::braid::BraidWord;
use linksgould::cli::run;
use linksgould::hecke::element::{AlgebraElement, TermJson};
use linksgould::rmatrix::lg_invariant;

fn lg(args: &[&str]) -> linksgould::cli::Outcome {
    run(std::iter::once("lg").chain(args.iter().copied()))
}

#[test]
fn compute_trefoil() {
    let out = lg(&["compute", "--strands", "2", "--braid", "[1,1,1]"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("LG = 1 - t1 + t1^2 - t0 + 2*t0*t1 - t0*t1^2 + t0^2 - t0^2*t1"));
}

#[test]
fn json_round_trip() {
    let out = lg(&["compute", "--strands", "3", "--braid", "[1,-2,1,-2]", "--json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["strands"], 3);
    assert_eq!(v["components"], 1);
    let parsed = Laurent::parse(v["lg"].as_str().unwrap()).unwrap();
    assert_eq!(parsed, lg_invariant(&BraidWord::parse("[1,-2,1,-2]", 3).unwrap()).unwrap());
}

#[test]
fn dims_table() {
    let out = lg(&["dims", "--max", "10"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["6", "19404", "19404", "true"]));
}

#[test]
fn trace_with_specialization() {
    let out = lg(&["trace", "--braid", "[1,-2,1,-2,3]", "--spec", "-1,2,3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "tr4 = 4\n");
    let out = lg(&["trace", "--braid", "[1,2,3]"]);
    assert_eq!(out.stdout, "tr4 = 1\n");
}

#[test]
fn derive_r2_json_parses_back() {
    let out = lg(&["derive", "r2", "--json"]);
    assert_eq!(out.code, 0);
    let terms: Vec<TermJson> = serde_json::from_str(&out.stdout).unwrap();
    let e = AlgebraElement::from_json_terms(&terms).unwrap();
    assert_eq!(e.len(), 17);
}

#[test]
fn usage_errors() {
    let out = lg(&["compute", "--strands", "3", "--braid", "[3]"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("out of range"));
    assert!(out.stderr.contains("Usage"));
    assert_eq!(lg(&["frobnicate"]).code, 2);
    assert_eq!(lg(&["compute", "--strands", "2"]).code, 2);
    assert_eq!(lg(&["trace", "--braid", "[1]", "--spec", "1,2"]).code, 2);
    assert_eq!(lg(&["verify", "nothing"]).code, 2);
}

#[test]
fn verify_is_deterministic() {
    let a = lg(&["verify", "bratteli"]);
    let b = lg(&["verify", "bratteli"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let t = lg(&["verify", "trace", "--json"]);
    assert_eq!(t.code, 0);
    assert_eq!(t.stdout, lg(&["verify", "trace", "--json"]).stdout);
}
