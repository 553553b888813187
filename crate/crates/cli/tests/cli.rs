use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use twodist_cli::build::{build, BuildOptions};
use twodist_cli::AnyGraph;

fn twodist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twodist"))
        .args(args)
        .env_remove("TWODIST_TIMEOUT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn built(dir: &Path, name: &str) -> PathBuf {
    let p = dir.join(format!("{name}.json"));
    let o = twodist(&["build", name, "-o", p.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn documents_round_trip_on_the_catalog() {
    for name in ["g5", "g126", "g16", "g31", "g31-alt", "g7", "g19", "g313"] {
        let g = build(name, &BuildOptions::default()).unwrap();
        let text = g.to_json();
        let back = AnyGraph::from_json(&text).unwrap();
        assert_eq!(back.graph(), g.graph(), "{name}");
        assert_eq!(back.to_json(), text, "{name}");
        assert_eq!(back.is_spindled(), g.is_spindled());
    }
}

#[test]
fn unreproduced_hexagon_builds_fail_cleanly() {
    for name in ["g199", "g397"] {
        let e = build(name, &BuildOptions::default()).err().unwrap();
        assert!(matches!(e, twodist::Error::MissingVertex(_)), "{name}: {e}");
    }
}

#[test]
fn corrupted_documents_are_rejected() {
    let g = build("g16", &BuildOptions::default()).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
    // move one unit edge onto a non-adjacent pair
    doc["e1"][0] = serde_json::json!([0, 15]);
    let e = AnyGraph::from_json(&doc.to_string()).err().unwrap();
    assert!(matches!(e, twodist::Error::Validation(_)), "{e}");

    let mut doc: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
    doc["vertices"][3]["canon"] = serde_json::json!([0, 0, 0, 0, 4]);
    assert!(AnyGraph::from_json(&doc.to_string()).is_err());

    let mut doc: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
    doc["family"] = serde_json::json!("hexagon");
    assert!(AnyGraph::from_json(&doc.to_string()).is_err());

    let s = build("g31", &BuildOptions::default()).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
    doc["spindle"]["forbidden_sq"] = doc["targets"][1].clone();
    assert!(AnyGraph::from_json(&doc.to_string()).is_err());
}

#[test]
fn solve_force_enumerate_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g16 = built(dir.path(), "g16");
    let g16 = g16.to_str().unwrap();

    let o = twodist(&["force-pair", g16, "1", "16", "-k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "forced");
    let o = twodist(&["force-pair", g16, "1", "15", "-k", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let o = twodist(&["force-pair", g16, "1", "2", "-k", "5"]);
    assert_eq!(o.status.code(), Some(2), "adjacent pair is a usage error");

    let model = dir.path().join("c.json");
    let o = twodist(&[
        "solve",
        g16,
        "-k",
        "5",
        "--model-out",
        model.to_str().unwrap(),
        "--expect",
        "sat",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SAT"));
    let o = twodist(&["solve", g16, "-k", "5", "--diff", "1,16"]);
    assert!(stdout(&o).starts_with("UNSAT"));
    let o = twodist(&["solve", g16, "-k", "5", "--expect", "unsat"]);
    assert_eq!(o.status.code(), Some(1));

    let o = twodist(&["enumerate", g16, "-k", "5", "--canonical", "--count"]);
    assert_eq!(stdout(&o).trim(), "12");

    let o = twodist(&["automorphisms", g16]);
    assert!(stdout(&o).contains("uncolored 48"));

    let svg = dir.path().join("g16.svg");
    let o = twodist(&[
        "render",
        g16,
        "--coloring",
        model.to_str().unwrap(),
        "--highlight",
        "1,16",
        "-o",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 16);
    assert_eq!(text.matches(r#"fill="black""#).count(), 2);
    assert_eq!(text.matches("<line").count(), 56);

    let o = twodist(&["export-cnf", g16, "-k", "5", "--diff", "1,16"]);
    let cnf = twodist::solver::CnfFormula::parse_dimacs(&stdout(&o)).unwrap();
    let (res, _) = twodist::solver::solve_cnf(&cnf, twodist::solver::Budget::unlimited());
    assert_eq!(res, twodist::solver::CnfResult::Unsat);

    assert_eq!(twodist(&["build", "g1000"]).status.code(), Some(2));
    assert_eq!(twodist(&["solve"]).status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"family\": \"pentagon\"}").unwrap();
    assert_ne!(
        twodist(&["edges", bad.to_str().unwrap()]).status.code(),
        Some(0)
    );
}

#[test]
fn timeout_is_reported_as_indeterminate() {
    let dir = tempfile::tempdir().unwrap();
    let g126 = built(dir.path(), "g126");
    // either outcome is fine; an exhausted budget must map to exit 3
    let o = Command::new(env!("CARGO_BIN_EXE_twodist"))
        .args(["solve", g126.to_str().unwrap(), "-k", "4"])
        .env("TWODIST_TIMEOUT", "1")
        .output()
        .unwrap();
    let out = stdout(&o);
    match o.status.code() {
        Some(3) => assert!(out.contains("TIMEOUT")),
        Some(0) => assert!(out.starts_with("UNSAT")),
        c => panic!("unexpected exit {c:?}"),
    }
}

#[test]
fn reduce_and_spindle_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let g126 = built(dir.path(), "g126");
    let red = dir.path().join("r.json");
    // vertex 1 is the origin and 126 the extreme point 5u0
    let o = twodist(&[
        "reduce",
        g126.to_str().unwrap(),
        "1",
        "126",
        "-k",
        "5",
        "-o",
        red.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = AnyGraph::from_json(&std::fs::read_to_string(&red).unwrap()).unwrap();
    assert_eq!(r.graph().n(), 16);
    let g16 = twodist::catalog::g16().unwrap();
    assert!(twodist::graphs::is_isomorphic(r.graph(), g16.graph()).is_some());

    let sp = dir.path().join("s.json");
    let o = twodist(&[
        "spindle",
        red.to_str().unwrap(),
        "1",
        "16",
        "-o",
        sp.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = twodist(&[
        "solve",
        sp.to_str().unwrap(),
        "-k",
        "5",
        "--expect",
        "unsat",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = twodist(&["reduce", sp.to_str().unwrap(), "1", "16", "-k", "5"]);
    assert_ne!(
        o.status.code(),
        Some(0),
        "spindled graphs have no exact induced subgraphs"
    );
    let o = twodist(&["reduce", red.to_str().unwrap(), "1", "2", "-k", "5"]);
    assert_ne!(o.status.code(), Some(0));
}
