use std::process::{Command, Output};

use serde_json::Value;
use signed_corona::{build_product, default_orientation, gen::MarkingChoice, graph::families, OrientedGraph, ProductKind, SignedGraph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signed-corona"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn header(o: &Output) -> (usize, usize) {
    let out = stdout(o);
    let mut it = out.lines().next().unwrap().split_whitespace().map(|t| t.parse().unwrap());
    (it.next().unwrap(), it.next().unwrap())
}

#[test]
fn build_edge_corona_of_triangle_and_point() {
    let o = run(&["build", "-p", "edge-corona", "C3", "K1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(header(&o), (6, 9));
}

#[test]
fn build_svnc_of_edge_and_point() {
    let o = run(&["build", "-p", "svnc", "K2", "K1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(header(&o), (5, 4));
}

#[test]
fn build_output_reparses_to_the_product() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let layout = dir.path().join("layout.json");
    let o = run(&[
        "build", "-p", "senc", "C4", "P3", "-o", out.to_str().unwrap(), "--layout", layout.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let parsed = SignedGraph::parse_edge_list(&std::fs::read_to_string(&out).unwrap()).unwrap();

    let g1 = families::cycle(4);
    let g2 = families::path(3);
    let og1 = OrientedGraph::new(g1.clone(), default_orientation(&g1)).unwrap();
    let mu2 = MarkingChoice::Canonical.apply(&g2);
    let expected = build_product(ProductKind::SubdivisionEdgeNc, &og1, &g2, &mu2).unwrap();
    assert_eq!(parsed, expected.graph);

    let sidecar: Value = serde_json::from_str(&std::fs::read_to_string(&layout).unwrap()).unwrap();
    assert_eq!(sidecar["schema"], 1);
}

#[test]
fn malformed_sign_token_exits_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1 +\n1 2 0\n").unwrap();
    let o = run(&["build", "-p", "edge-corona", "C3", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn charpoly_matches_known_coefficients() {
    let o = run(&["charpoly", "-p", "edge-corona", "C3", "K1", "-k", "A"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next().unwrap(), "1, 0, -9, -8, 9, 6, -4");
}

#[test]
fn random_walk_needs_regular_second_factor() {
    let o = run(&["charpoly", "-p", "svnc", "C3", "P3", "-k", "P"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_json_reports_equality() {
    let o = run(&["charpoly", "-p", "senc", "C4", "C3", "-k", "L", "--verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["report"]["equal"], true);
}

#[test]
fn random_orientation_without_seed_exits_3() {
    let o = run(&["build", "-p", "edge-corona", "C3", "K1", "--orientation", "random"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["build", "-p", "edge-corona", "C3", "K1", "--orientation", "random", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn balance_and_census_smoke() {
    let o = run(&["balance", "-p", "senc", "C4", "K3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "balanced");

    let dir = tempfile::tempdir().unwrap();
    let g2 = dir.path().join("g2.txt");
    std::fs::write(&g2, "3 2\n0 1 +\n1 2 -\n").unwrap();
    let o = run(&["balance", "-p", "edge-corona", "C3", g2.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["balanced"], false);

    let o = run(&["census", "-p", "edge-corona", "C4", g2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("T3"));
}

#[test]
fn verify_all_small_sweep_and_injected_fault() {
    let base = ["verify-all", "--instances", "3", "--max-n1", "3", "--max-n2", "2"];
    assert_eq!(run(&base).status.code(), Some(0));

    let mut faulty = base.to_vec();
    faulty.extend(["--inject-fault", "senc:L:0"]);
    assert_eq!(run(&faulty).status.code(), Some(1));

    let mut out_of_range = base.to_vec();
    out_of_range[6] = "9";
    assert_eq!(run(&out_of_range).status.code(), Some(3));
}

#[test]
fn fixed_seed_output_is_byte_identical() {
    let args = ["verify-all", "--instances", "4", "--max-n1", "4", "--max-n2", "3", "--seed", "17", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let args = ["cospectral-search", "--max-order", "4", "-k", "L", "-p", "senc", "--first-factor", "C3", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
