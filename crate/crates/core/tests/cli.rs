use std::path::Path;

use serde_json::Value;
use tenslab::cli::{run, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_YES};

fn call(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args.iter().copied());
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("not JSON ({e}): {out}"));
    (code, v)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn search_then_verify_a_written_mapping() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k4k3.json");
    let (code, v) = call(&["search-tt", "--source", "complete:4", "--target", "complete:3", "--ring", "Z2", "--out", path(&out)]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(v["verdict"], "yes");
    assert_eq!(call(&["verify", "--map", path(&out), "--ring", "Z2"]).0, EXIT_YES);
    assert_eq!(call(&["verify-oracle", "--map", path(&out), "--ring", "Z2"]).0, EXIT_YES);
    let (code, v) = call(&["induced", "--map", path(&out)]);
    assert_eq!((code, v["induced"].as_bool()), (EXIT_NO, Some(false)));
    assert!(!v["obstructions"].as_array().unwrap().is_empty());
}

#[test]
fn negative_verdicts_round_trip_their_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("p.json");
    let cert = dir.path().join("cert.json");
    assert_eq!(call(&["construct", "witness", "--graph", "petersen_to_c5", "--out", path(&map)]).0, EXIT_YES);
    assert_eq!(call(&["verify", "--map", path(&map), "--ring", "Z2"]).0, EXIT_YES);
    let (code, v) = call(&["verify", "--map", path(&map), "--ring", "Z3", "--out", path(&cert)]);
    assert_eq!(code, EXIT_NO);
    assert!(v["certificate"].is_object());
    std::fs::write(&cert, serde_json::to_string(&v).unwrap()).unwrap();
    let (code, v) = call(&["verify", "--map", path(&map), "--ring", "Z3", "--certificate", path(&cert)]);
    assert_eq!((code, v["certificate_holds"].as_bool()), (EXIT_YES, Some(true)));
    // A certificate over another ring is rejected.
    assert_eq!(call(&["verify", "--map", path(&map), "--ring", "Z5", "--certificate", path(&cert)]).0, EXIT_USAGE);
}

#[test]
fn mapping_files_resolve_graphs_next_to_them() {
    let dir = tempfile::tempdir().unwrap();
    let (_, g) = call(&["catalog", "get", "cycle:5"]);
    std::fs::write(dir.path().join("c5.json"), serde_json::to_string(&g).unwrap()).unwrap();
    let map = r#"{"source": "c5.json", "target": "complete:2", "map": {"0": "0"}}"#;
    std::fs::write(dir.path().join("m.json"), map).unwrap();
    // A map that misses edges is a format error.
    assert_eq!(call(&["verify", "--map", path(&dir.path().join("m.json")), "--ring", "Z2"]).0, EXIT_USAGE);
}

#[test]
fn homomorphism_verbs() {
    let (code, v) = call(&["search-hom", "--source", "petersen", "--target", "cycle:5"]);
    assert_eq!((code, v["verdict"].as_str()), (EXIT_NO, Some("no")));
    let (code, v) = call(&["search-hom", "--source", "cycle:5", "--target", "complete:3", "--count"]);
    assert_eq!((code, v["count"].as_str(), v["exact"].as_bool()), (EXIT_YES, Some("30"), Some(true)));
    let (code, v) = call(&["search-hom", "--source", "complete:4", "--target", "complete:3", "--node-budget", "1"]);
    assert_eq!((code, v["verdict"].as_str()), (EXIT_UNKNOWN, Some("unknown")));
}

#[test]
fn counting_by_search_and_exhaustively_agree() {
    let search = call(&["count-tt", "--source", "cycle:4", "--target", "loop_edge_T", "--ring", "Z2"]);
    let brute = call(&["count-tt", "--source", "cycle:4", "--target", "loop_edge_T", "--ring", "Z2", "--exhaustive"]);
    assert_eq!(search.1["count"], "8");
    assert_eq!(search.1["count"], brute.1["count"]);
}

#[test]
fn invariants_and_niceness() {
    assert_eq!(call(&["gm", "--graph", "petersen", "--ring", "Z2"]).1["g_m"], 5);
    let (_, v) = call(&["gm", "--graph", "complete:2", "--ring", "Z2"]);
    assert_eq!(v["infinite"], true);
    assert_eq!(call(&["nice", "--graph", "complete:4"]).0, EXIT_NO);
    assert_eq!(call(&["nice", "--graph", "complete:4", "--weak"]).0, EXIT_YES);
    let (code, v) = call(&["nice", "--graph", "cycle:5"]);
    assert_eq!(code, EXIT_NO);
    assert_eq!(v["failures"][0]["condition"], 1);
    assert_eq!(call(&["chrom-connect", "--graph", "complete:5"]).0, EXIT_YES);
    assert_eq!(call(&["chi-tt", "--graph", "complement_cycle:7", "--ring", "Z2"]).1["chi_tt"], 3);
    assert_eq!(call(&["tt-perfect", "--graph", "cycle:5"]).0, EXIT_NO);
    assert_eq!(call(&["critical", "--graph", "cycle:5"]).0, EXIT_YES);
}

#[test]
fn homotens_verbs() {
    assert_eq!(call(&["right-homotens", "--graph", "complete:4", "--ring", "Z2"]).0, EXIT_YES);
    assert_eq!(call(&["right-homotens", "--graph", "complete:3", "--ring", "Z2"]).0, EXIT_NO);
    let (code, v) = call(&["left-homotens", "--graph", "complete:5", "--ring", "Z2", "--bound", "3"]);
    assert_eq!((code, v["verdict"].as_str()), (EXIT_YES, Some("holds-bounded")));
    let (code, v) = call(&["left-homotens", "--graph", "petersen", "--ring", "Z2", "--target", "cycle:5"]);
    assert_eq!((code, v["verdict"].as_str()), (EXIT_NO, Some("fails")));
    assert!(v["witness"]["map"].is_object());
}

#[test]
fn delta_writes_a_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let (code, v) = call(&["delta", "--graph", "complete:3", "--ring", "Z2", "--out", path(&out), "--quiet"]);
    assert_eq!((code, v["vertices"].as_u64()), (EXIT_YES, Some(8)));
    assert!(out.is_file());
    assert!(dir.path().join("d.sidecar.json").is_file());
    assert_eq!(call(&["delta", "--graph", "complete:5", "--ring", "Z", "--quiet"]).0, EXIT_USAGE);
}

#[test]
fn constructions() {
    let (_, v) = call(&["construct", "join-k5", "--graph", "cycle:4"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 9);
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/connector.json");
    let (code, g) = call(&["construct", "antichain", "--connector", fixture, "--bits", "10"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 129);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.json");
    let args = ["construct", "antichain", "--connector", fixture, "--bits", "10", "--mapping-to", "01", "--out", path(&out)];
    assert_eq!(call(&args).0, EXIT_YES);
    assert_eq!(call(&["verify", "--map", path(&out), "--ring", "Z2", "--quiet"]).0, EXIT_YES);
    assert_eq!(call(&["construct", "antichain", "--connector", fixture, "--bits", "1x"]).0, EXIT_USAGE);
}

#[test]
fn catalog_and_sampling() {
    let (code, v) = call(&["catalog", "list"]);
    assert_eq!(code, EXIT_YES);
    assert!(v["graphs"].as_array().unwrap().len() > 5);
    assert_eq!(call(&["catalog", "get", "shih"]).0, EXIT_USAGE);
    let args = ["sample-nice", "--n", "7", "--p", "0.9", "--trials", "20", "--seed", "3"];
    assert_eq!(run(args), run(args));
}

#[test]
fn usage_errors_are_json() {
    let (code, v) = call(&["verify"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(v["error"].is_string());
    assert_eq!(call(&["gm", "--graph", "nonsense:3", "--ring", "Z2"]).0, EXIT_USAGE);
    assert_eq!(call(&["gm", "--graph", "cycle:5", "--ring", "Q"]).0, EXIT_USAGE);
}
