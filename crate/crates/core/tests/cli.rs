use std::path::PathBuf;
use std::process::{Command, Output};

use gallai_product::document::DecompositionDocument;
use gallai_product::dot::parse_product_dot;
use gallai_product::graph::norm;
use gallai_product::{Graph, SCHEMA_VERSION};

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn document(out: &Output) -> DecompositionDocument {
    serde_json::from_slice(&out.stdout).expect("json document")
}

#[test]
fn prism_from_files() {
    let (g, h) = (scratch("c3.txt"), scratch("p2.txt"));
    std::fs::write(&g, "0 1\n1 2\n2 0\n").unwrap();
    std::fs::write(&h, "0 1\n").unwrap();
    let out = gallai(&["decompose", "--g", g.to_str().unwrap(), "--h", h.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = document(&out);
    assert_eq!(doc.schema_version, SCHEMA_VERSION);
    assert_eq!(doc.paths.len(), 3);
    assert!(doc.verified);
}

#[test]
fn bowtie_and_verify_round_trip() {
    let out = gallai(&["decompose", "--g", "bowtie", "--h", "P2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = document(&out);
    assert!(doc.verified && doc.paths.len() <= 5);
    let file = scratch("bowtie.json");
    std::fs::write(&file, &out.stdout).unwrap();
    assert_eq!(gallai(&["verify", file.to_str().unwrap()]).status.code(), Some(0));

    let mut broken = doc.clone();
    broken.paths.pop();
    std::fs::write(&file, serde_json::to_string(&broken).unwrap()).unwrap();
    let out = gallai(&["verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("edge_uncovered"));
}

#[test]
fn unsupported_and_usage_exit_two() {
    let out = gallai(&["decompose", "--g", "K4", "--h", "P2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported: tricyclic"));
    assert_eq!(gallai(&["decompose", "--g", "nonsense", "--h", "P2"]).status.code(), Some(2));
    assert_eq!(gallai(&["gen", "unicyclic", "2"]).status.code(), Some(2));
    assert_eq!(gallai(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn oracle_budget_exits_three() {
    assert_eq!(gallai(&["oracle", "--g", "K6", "--budget", "5"]).status.code(), Some(3));
    let out = gallai(&["oracle", "--g", "K5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
}

#[test]
fn generator_output() {
    let text = String::from_utf8(gallai(&["gen", "unicyclic", "6", "--seed", "1"]).stdout).unwrap();
    let g = Graph::parse_edge_list(&text).unwrap();
    assert_eq!((g.n(), g.m()), (6, 6));
    assert!(g.is_connected());
    let text = String::from_utf8(gallai(&["gen", "bicyclic", "5", "--seed", "7", "--format", "json"]).stdout).unwrap();
    let g: Graph = serde_json::from_str(&text).unwrap();
    assert_eq!((g.n(), g.m()), (5, 6));
    let g = Graph::parse_edge_list(&String::from_utf8(gallai(&["gen", "tree", "1"]).stdout).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (1, 0));
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["decompose", "--g", "diamond", "--h", "paw"][..],
        &["gen", "bicyclic", "9", "--seed", "42"],
        &["export-dot", "--g", "C5", "--h", "K3"],
        &["oracle", "--g", "bowtie"],
        &["sweep", "empty"],
    ] {
        let (a, b) = (gallai(args), gallai(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn dot_export_matches_product() {
    let out = gallai(&["export-dot", "--g", "paw", "--h", "C4"]);
    assert_eq!(out.status.code(), Some(0));
    let edges = parse_product_dot(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let (g, h) = (Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(), Graph::cycle(4));
    let product = g.cartesian_product(&h);
    let mut got: Vec<(usize, usize)> =
        edges.iter().map(|&((a, b), _)| norm(a.0 * h.n() + a.1, b.0 * h.n() + b.1)).collect();
    got.sort_unstable();
    let mut want = product.edges().to_vec();
    want.sort_unstable();
    assert_eq!(got, want);
    assert!(edges.iter().all(|&(_, p)| p >= 0));
}

#[test]
fn small_sweep() {
    let file = scratch("sweep.json");
    let out = gallai(&["sweep", "paths-cycles", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["max_ratio"].as_f64().unwrap() <= 1.0);
}
