mod common;

use common::{check_golden, matmor, u64s};
use serde_json::json;

const FANO: &str = "../core/fixtures/fano-projection.json";
const GRAPH_HOM: &str = "../core/fixtures/graph-hom.json";
const K7_GRAPH: &str = "../core/fixtures/k7-graph.json";
const K7_ROTATION: &str = "../core/fixtures/k7-rotation.json";
const WEAK_MAP_SUM: &str = "tests/data/weak-map-sum.json";

fn golden(name: &str, args: &[&str], code: i32) {
    let run = matmor(args);
    assert_eq!(run.code, code, "{}{}", run.stdout, run.stderr);
    check_golden(name, &run.stdout).unwrap();
}

#[test]
fn goldens() {
    golden("fano-projection-bvector.json", &["bvector", FANO], 0);
    golden("graph-hom-bvector.json", &["bvector", GRAPH_HOM], 0);
    golden(
        "graph-hom-bvector.tsv",
        &["bvector", GRAPH_HOM, "--format", "tsv"],
        0,
    );
    golden("k7-dualize.json", &["dualize", K7_GRAPH, K7_ROTATION], 0);
    golden(
        "graph-hom-ulc.json",
        &["ulc", "0", "0", "27", "79", "111", "75", "0", "0", "0", "0"],
        0,
    );
    golden(
        "product-linear-lorentzian.json",
        &["lorentzian", "tests/data/product-linear.json"],
        0,
    );
    golden(
        "weak-map-sum-limit.json",
        &["limit", WEAK_MAP_SUM, "--exponents", "2,2,1"],
        0,
    );
    golden("weak-map-sum-mnat.json", &["mnat", WEAK_MAP_SUM], 0);
    golden("weak-map-sum-probe.json", &["probe-ln", WEAK_MAP_SUM], 0);
    golden(
        "bad-flag-check.json",
        &["check", "flag", "tests/data/bad-flag.json"],
        0,
    );
    golden(
        "bad-map-error.json",
        &["bvector", "tests/data/bad-map.json"],
        1,
    );
    golden(
        "u24-lasvergnas.json",
        &[
            "tutte",
            "lasvergnas",
            "tests/data/u24.json",
            "tests/data/u14.json",
        ],
        0,
    );
}

#[test]
fn fano_b_vector() {
    let r = matmor(&["bvector", FANO]).result();
    let mut expect = vec![0u64; 15];
    expect[3..6].copy_from_slice(&[224, 840, 1232]);
    assert_eq!(u64s(&r["b_vector"]), expect);
}

#[test]
fn tsv_matches_json() {
    let json = u64s(&matmor(&["bvector", GRAPH_HOM]).result()["b_vector"]);
    let tsv = matmor(&["bvector", GRAPH_HOM, "--format", "tsv"]).stdout;
    let mut lines = tsv.lines();
    assert_eq!(lines.next(), Some("k\tb_k"));
    let rows: Vec<u64> = lines
        .enumerate()
        .map(|(k, l)| {
            let (a, b) = l.split_once('\t').unwrap();
            assert_eq!(a.parse::<usize>().unwrap(), k);
            b.parse().unwrap()
        })
        .collect();
    assert_eq!(rows, json);
}

#[test]
fn ulc_accepts_the_graph_homomorphism_sequence() {
    let r = matmor(&["ulc", "0", "0", "27", "79", "111", "75", "0", "0", "0", "0"]).result();
    assert_eq!(r["ultra_log_concave"], json!(true));
    let r = matmor(&["ulc", "1", "1", "1"]).result();
    assert_eq!(r["ultra_log_concave"], json!(false));
    let r = matmor(&["ulc", "1", "-1/2"]).result();
    assert_eq!(r["ultra_log_concave"], json!(false));
}

#[test]
fn product_of_linear_forms_is_lorentzian() {
    let r = matmor(&[
        "lorentzian",
        "tests/data/product-linear.json",
        "--sample",
        "--trials",
        "50",
    ])
    .result();
    assert_eq!(r["verdict"]["lorentzian"], json!(true));
    assert_eq!(r["sampled_log_concavity"]["passes"], json!(true));
}

#[test]
fn flag_tutte_via_cli() {
    let dir = tempfile::tempdir().unwrap();
    let flag = dir.path().join("flag.json");
    std::fs::write(
        &flag,
        r#"{"type":"flag","constituents":[{"kind":"uniform","n":4,"rank":1},{"kind":"uniform","n":4,"rank":2}]}"#,
    )
    .unwrap();
    let flag = flag.to_str().unwrap();
    let r = matmor(&["lorentzian", "--flag", flag, "--q", "1/2,3/4"]).result();
    assert_eq!(r["verdict"]["lorentzian"], json!(true));
    assert_eq!(r["degree"], json!(4));
    let r = matmor(&["tutte", "flag", flag, "--q", "1,1"]).result();
    // unit parameters give the product of (w0 + wi)
    assert_eq!(r["polynomial"]["terms"].as_array().unwrap().len(), 16);
}

#[test]
fn multivariate_tutte_of_u24() {
    let r = matmor(&["tutte", "multivariate", "tests/data/u24.json", "--q", "1/2"]).result();
    let text = r["polynomial"]["text"].as_str().unwrap();
    assert!(text.starts_with("4*w1*w2*w3*w4 + "), "{text}");
    assert!(text.ends_with(" + 2*w4 + 1"), "{text}");
}

#[test]
fn weak_map_sum_end_to_end() {
    let r = matmor(&["limit", WEAK_MAP_SUM, "--exponents", "2,2,1"]).result();
    assert_eq!(r["polynomial"]["text"], json!("w1*w3 + w1 + w2 + w3 + 1"));
    let r = matmor(&[
        "limit",
        WEAK_MAP_SUM,
        "--exponents",
        "2,2,1",
        "--sample",
        "--near-ones",
        "0.1",
    ])
    .result();
    assert_eq!(r["sampled_log_concavity"]["passes"], json!(false));
    let r = matmor(&["probe-ln", WEAK_MAP_SUM]).result();
    assert_eq!(r["first_failing_p"], json!({"num": 1, "den": 8}));
    assert_eq!(r["consistent_with_membership"], json!(false));
    let r = matmor(&["mnat", WEAK_MAP_SUM]).result();
    assert_eq!(r["submodular"]["submodular"], json!(true));
}

#[test]
fn checks_report_witnesses() {
    let r = matmor(&["check", "flag", "tests/data/bad-flag.json"]).result();
    assert_eq!(r["holds"], json!(false));
    assert_eq!(r["witness"], json!({"S1": [1, 3], "S2": [1, 2, 3]}));
    let r = matmor(&["check", "flag", "tests/data/weak-map-flag.json"]).result();
    assert_eq!(r["holds"], json!(false));
    let r = matmor(&[
        "check",
        "quotient",
        "tests/data/u24.json",
        "tests/data/u14.json",
    ])
    .result();
    assert_eq!(r["holds"], json!(true));
    let r = matmor(&[
        "check",
        "quotient",
        "tests/data/u14.json",
        "tests/data/u24.json",
    ])
    .result();
    assert_eq!(r["holds"], json!(false));
    let r = matmor(&["check", "morphism", GRAPH_HOM, "--condition", "all"]).result();
    assert_eq!(
        (r["holds"].clone(), r["agree"].clone()),
        (json!(true), json!(true))
    );
    let r = matmor(&["check", "delta", "tests/data/delta-good.json"]).result();
    assert_eq!(r["delta_matroid"], json!(true));
    let r = matmor(&["check", "delta", "tests/data/delta-bad.json"]).result();
    assert_eq!(r["delta_matroid"], json!(false));
}

#[test]
fn exit_codes() {
    let run = matmor(&["bvector", "tests/data/bad-map.json"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.json()["error"]["kind"], json!("schema"));
    let run = matmor(&["bvector", "tests/data/missing.json"]);
    assert_eq!(run.code, 1);
    assert!(run.json()["error"].is_object());
    let run = matmor(&["lorentzian", "tests/data/weak-map-sum.json"]);
    assert_eq!(run.code, 1);
    assert_eq!(matmor(&["no-such-command"]).code, 2);
    assert_eq!(matmor(&["limit", WEAK_MAP_SUM]).code, 2);
    assert_eq!(matmor(&["ulc"]).code, 2);
}

#[test]
fn enumeration_bound_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("big.json");
    std::fs::write(&m, r#"{"type":"matroid","kind":"uniform","n":30,"rank":3}"#).unwrap();
    let run = matmor(&["tutte", "multivariate", m.to_str().unwrap(), "--q", "1"]);
    assert_eq!(run.code, 1);
    let err = &run.json()["error"];
    assert_eq!(err["kind"], json!("enumeration_bound"));
    assert_eq!(err["bound"], json!(22));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["bvector", GRAPH_HOM],
        vec![
            "lorentzian",
            "tests/data/product-linear.json",
            "--sample",
            "--trials",
            "30",
        ],
        vec![
            "limit",
            WEAK_MAP_SUM,
            "--exponents",
            "2,2,1",
            "--sample",
            "--seed",
            "7",
        ],
    ] {
        let a = matmor(&args);
        let b = matmor(&args);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout);
    }
    let a = matmor(&["bvector", GRAPH_HOM]).json();
    assert_eq!(a["seed"], json!(matmor::random::DEFAULT_SEED));
    assert_eq!(a["inputs_sha256"].as_str().unwrap().len(), 64);
    let timed = matmor(&["bvector", GRAPH_HOM, "--timing"]).json();
    assert!(timed["timing_ms"].is_number());
    assert_eq!(timed["command"], a["command"]);
}

#[test]
fn fixtures_are_emitted_and_written() {
    let run = matmor(&["fixtures", "graph-hom"]);
    assert_eq!(run.stdout, matmor::io::fixtures::GRAPH_HOM);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let run = matmor(&["fixtures", "k7-torus", "--out", out]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    for file in ["k7-torus.json", "k7-graph.json", "k7-rotation.json"] {
        assert!(dir.path().join(file).exists(), "{file} missing");
    }
    let written = dir.path().join("k7-torus.json");
    assert_eq!(
        std::fs::read_to_string(&written).unwrap(),
        matmor::io::fixtures::K7_TORUS
    );
}
