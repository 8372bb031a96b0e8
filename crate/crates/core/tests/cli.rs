use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn twowalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twowalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("p {n} {}\n", edges.len());
    for (u, v) in edges {
        s.push_str(&format!("e {u} {v}\n"));
    }
    s
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const G1: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
    (4, 0),
    (4, 1),
    (5, 2),
    (5, 3),
];
const TWO_K2: &[(usize, usize)] = &[(0, 1), (2, 3)];
const STAR: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3)];

#[test]
fn check_reports_structure() {
    let dir = TempDir::new().unwrap();
    let c5 = write(
        &dir,
        "c5.txt",
        &edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    );
    let out = twowalk(&["check", s(&c5)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["omega"], 2);
    assert_eq!(v["two_k2_free"], true);
    assert_eq!(v["connected"], true);

    let bad = write(&dir, "2k2.txt", &edge_list(4, TWO_K2));
    let out = twowalk(&["check", s(&bad)]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["witness"], serde_json::json!([0, 1, 2, 3]));

    let garbage = write(&dir, "bad.txt", "p 3 1\ne 0 x\n");
    let out = twowalk(&["check", s(&garbage)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        twowalk(&["check", "/nonexistent/graph.txt"]).status.code(),
        Some(2)
    );
}

#[test]
fn walk_outcomes() {
    let dir = TempDir::new().unwrap();
    let g1 = write(&dir, "g1.txt", &edge_list(6, G1));
    let out = twowalk(&["walk", s(&g1)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["path"], "constructive");
    let visits = v["visits"].as_object().unwrap();
    assert_eq!(visits.len(), 6);
    assert!(visits.values().all(|c| c.as_u64().unwrap() <= 2));
    assert!(v.get("trace").is_none());

    let star = write(&dir, "star.txt", &edge_list(4, STAR));
    let out = twowalk(&["walk", s(&star)]);
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["ratio"], "1/3");
    assert_eq!(v["cut"], serde_json::json!([0]));

    let bad = write(&dir, "2k2.txt", &edge_list(4, TWO_K2));
    assert_eq!(twowalk(&["walk", s(&bad)]).status.code(), Some(3));
}

#[test]
fn traced_walk_matches_golden() {
    let dir = TempDir::new().unwrap();
    let g1 = write(&dir, "g1.txt", &edge_list(6, G1));
    let out = twowalk(&["walk", "--trace", s(&g1)]);
    assert_eq!(out.status.code(), Some(0));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/G1.json");
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        std::fs::read_to_string(golden).unwrap()
    );
}

#[test]
fn toughness_values_and_limit() {
    let dir = TempDir::new().unwrap();
    let c4 = write(
        &dir,
        "c4.txt",
        &edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
    );
    let out = twowalk(&["toughness", s(&c4)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["toughness"], "1/1");

    let k4 = write(
        &dir,
        "k4.txt",
        &edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    );
    assert_eq!(
        json(&twowalk(&["toughness", s(&k4)]))["toughness"],
        "infinite"
    );

    let cycle: Vec<_> = (0..30).map(|i| (i, (i + 1) % 30)).collect();
    let big = write(&dir, "c30.txt", &edge_list(30, &cycle));
    assert_eq!(
        twowalk(&["toughness", "--limit", "18", s(&big)])
            .status
            .code(),
        Some(6)
    );
}

#[test]
fn walk_then_verify_agrees() {
    let dir = TempDir::new().unwrap();
    let out = twowalk(&[
        "gen",
        "--family",
        "filtered_2tough",
        "--n",
        "12",
        "--seed",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# gen family=filtered_2tough n=12 seed=5"));
    let graph = write(&dir, "g.txt", &text);

    let out = twowalk(&["walk", s(&graph)]);
    assert_eq!(out.status.code(), Some(0));
    let walk_doc = write(&dir, "walk.json", &String::from_utf8(out.stdout).unwrap());
    let out = twowalk(&["verify", s(&graph), s(&walk_doc)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ok"], true);

    let broken = write(&dir, "broken.json", "[0, 1, 0]");
    let out = twowalk(&["verify", s(&graph), s(&broken)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["ok"], false);
    assert!(v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|x| x["check"] == "spanning"));

    let star = write(&dir, "star.txt", &edge_list(4, STAR));
    let cert = write(
        &dir,
        "cert.json",
        &String::from_utf8(twowalk(&["walk", s(&star)]).stdout).unwrap(),
    );
    assert_eq!(
        twowalk(&["verify", s(&star), s(&cert)]).status.code(),
        Some(0)
    );
    let lie = write(
        &dir,
        "lie.json",
        r#"{"cut":[1],"components":2,"ratio":"1/2"}"#,
    );
    assert_eq!(
        twowalk(&["verify", s(&star), s(&lie)]).status.code(),
        Some(1)
    );
    let junk = write(&dir, "junk.json", "{not json");
    assert_eq!(
        twowalk(&["verify", s(&star), s(&junk)]).status.code(),
        Some(2)
    );
}

#[test]
fn decompose_prints_tower() {
    let out = twowalk(&["gen", "--family", "fixed", "--name", "G2"]);
    let dir = TempDir::new().unwrap();
    let g2 = write(&dir, "g2.txt", &String::from_utf8(out.stdout).unwrap());
    let out = twowalk(&["decompose", s(&g2)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cliques"], serde_json::json!([[0, 1, 2, 3], [4, 5]]));
    assert_eq!(v["levels"], serde_json::json!([[6], []]));
    assert_eq!(
        String::from_utf8_lossy(&out.stderr),
        "Q1: 0 1 2 3\nD1: 6\nQ2: 4 5\nD2:\n"
    );
    assert_eq!(
        twowalk(&["gen", "--family", "fixed", "--name", "G9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fuzz_runs_clean() {
    for family in ["split", "co_chordal", "filtered_2tough"] {
        let out = twowalk(&[
            "fuzz",
            "--family",
            family,
            "--count",
            "100",
            "--seed",
            "11",
            "--size-range",
            "6..14",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{family}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v = json(&out);
        assert_eq!(v["passed"], 100);
        assert_eq!(v["failed"], 0);
    }
    assert_eq!(
        twowalk(&["fuzz", "--family", "petersen"]).status.code(),
        Some(2)
    );
    assert_eq!(
        twowalk(&[
            "fuzz",
            "--family",
            "filtered_2tough",
            "--size-range",
            "10..30"
        ])
        .status
        .code(),
        Some(6)
    );
}
