use std::path::PathBuf;
use std::process::{Command, Output};

use boolnet::{dot, BooleanNetwork};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn boolnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn without_wall_time(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("wall_time_ms="))
        .collect::<Vec<_>>()
        .join("\n")
}

fn temp_file(contents: &str, suffix: &str) -> tempfile::NamedTempFile {
    let f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    std::fs::write(f.path(), contents).unwrap();
    f
}

#[test]
fn analyze_three_cycle() {
    let o = boolnet(&["analyze", &fixture("and3.bn")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in [
        "fixed_points: {000}",
        "eosd_subnetwork: none",
        "conjugate_bijective: true",
        "weak_convergence: true",
        "strong_convergence: false",
        "attractors: {000}",
    ] {
        assert!(out.lines().any(|l| l == line), "missing `{line}` in\n{out}");
    }
    let keys: Vec<&str> = out.lines().map(|l| l.split(':').next().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn analyze_identity_and_critical_tables() {
    let id = temp_file("components 1\n0 -> 0\n1 -> 1\n", ".bn");
    let out = stdout(&boolnet(&["analyze", id.path().to_str().unwrap()]));
    assert!(out.contains("eosd_class: EvenSelfDual\n"));
    assert!(out.contains("circular: positive\n"));
    let out = stdout(&boolnet(&["analyze", &fixture("two_critical3.bn")]));
    assert!(out.contains("criticality: 2-critical\n"));
    assert!(out.contains("attractors: {000} {111}\n"));
    let out = stdout(&boolnet(&["analyze", &fixture("zero_critical3.bn")]));
    assert!(out.contains("criticality: 0-critical\n"));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let bad = temp_file("components 1\n0 -> 1\n", ".bn");
    let o = boolnet(&["analyze", bad.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(code(&boolnet(&["analyze", "/nonexistent/x.bn"])), 2);
    assert_eq!(code(&boolnet(&["analyze", &fixture("and3.bn"), "--bogus"])), 2);
    assert_eq!(code(&boolnet(&["verify", "--theorem", "NOPE", "--n", "1"])), 2);
    assert_eq!(
        code(&boolnet(&[
            "verify",
            "--theorem",
            "ROBERT",
            "--mode",
            "sample",
            "--n",
            "2"
        ])),
        2
    );
    assert_eq!(code(&boolnet(&["gen"])), 2);
    assert_eq!(code(&boolnet(&["gen", "--circular", "3", "+-"])), 2);
}

#[test]
fn width_caps_exit_3() {
    assert_eq!(code(&boolnet(&["verify", "--theorem", "ROBERT", "--n", "4"])), 3);
    assert_eq!(
        code(&boolnet(&["verify", "--theorem", "LEMMA1_HYPERCUBE", "--n", "5"])),
        3
    );
    assert_eq!(
        code(&boolnet(&[
            "search",
            "--question",
            "Q2",
            "--mode",
            "family",
            "--family",
            "andnets",
            "--n",
            "4"
        ])),
        3
    );
}

#[test]
fn verify_exhaustive_runs() {
    let o = boolnet(&["verify", "--theorem", "MAIN_EOSD", "--mode", "exhaustive", "--n", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("boolnet-report v1\n"));
    assert!(out.contains("candidates=256\n"));
    assert!(out.contains("counterexamples=0\n"));

    let o = boolnet(&["verify", "--theorem", "SHIH_DONG", "--mode", "exhaustive", "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("candidates=4\n"));

    let o = boolnet(&["verify", "--theorem", "LEMMA1_HYPERCUBE", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("candidates=256\n"));
}

#[test]
fn verify_sampled_and_all() {
    let o = boolnet(&[
        "verify",
        "--theorem",
        "ROBERT",
        "--mode",
        "sample",
        "--n",
        "4",
        "--count",
        "100000",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("generator=sample-n4-count100000-seed7\n"));

    let o = boolnet(&["verify", "--theorem", "all", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches("boolnet-report v1").count(), 35);

    let o = boolnet(&[
        "verify",
        "--theorem",
        "ANDNET_2CRITICAL,ANDNET_CHORDLESS",
        "--mode",
        "family",
        "--family",
        "andnets",
        "--n",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("candidates=81\n"));
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let run = |jobs: &str| {
        let o = boolnet(&[
            "verify",
            "--theorem",
            "COR_COUNTING,RICHARD2011",
            "--mode",
            "sample",
            "--n",
            "3",
            "--count",
            "4000",
            "--seed",
            "3",
            "--jobs",
            jobs,
        ]);
        assert_eq!(code(&o), 0);
        without_wall_time(&stdout(&o))
    };
    let one = run("1");
    assert_eq!(one, run("2"));
    assert_eq!(one, run("4"));
    assert_eq!(one, run("1"));
}

#[test]
fn search_reports_discoveries_without_failing() {
    let o = boolnet(&[
        "search",
        "--question",
        "Q2_0CRITICAL_ANDNET",
        "--mode",
        "family",
        "--family",
        "andnets",
        "--n",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("kind=question\n"));
    assert!(out.contains("discoveries=0\n"));
    let o = boolnet(&["search", "--question", "q1", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("candidates=256\n"));
}

#[test]
fn export_dot_variants() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.dot");
    let out_s = out.to_str().unwrap();
    let read = || dot::check(&std::fs::read_to_string(&out).unwrap()).unwrap();

    assert_eq!(
        code(&boolnet(&[
            "export-dot",
            "--input",
            &fixture("and3.bn"),
            "--what",
            "gfx",
            "000",
            "--out",
            out_s
        ])),
        0
    );
    let s = read();
    let mut arcs: Vec<_> = s
        .edges
        .iter()
        .map(|(a, b, attrs)| (a.as_str(), b.as_str(), attrs["sign"].as_str()))
        .collect();
    arcs.sort();
    assert_eq!(arcs, [("1", "2", "+"), ("2", "3", "+"), ("3", "1", "+")]);

    assert_eq!(
        code(&boolnet(&[
            "export-dot",
            "--input",
            &fixture("and3.bn"),
            "--what",
            "gamma",
            "--out",
            out_s
        ])),
        0
    );
    assert_eq!(read().edges.len(), 12);

    assert_eq!(
        code(&boolnet(&[
            "export-dot",
            "--input",
            &fixture("and3.sg"),
            "--out",
            out_s
        ])),
        0
    );
    assert_eq!(read().edges.len(), 6);

    let constant = temp_file("components a b\n00 -> 11\n10 -> 11\n01 -> 11\n11 -> 11\n", ".bn");
    let c = constant.path().to_str().unwrap();
    assert_eq!(
        code(&boolnet(&["export-dot", "--input", c, "--what", "gf", "--out", out_s])),
        0
    );
    assert!(read().edges.is_empty());

    assert_eq!(
        code(&boolnet(&[
            "export-dot",
            "--input",
            c,
            "--what",
            "gfx",
            "2",
            "--out",
            out_s
        ])),
        2
    );
    assert_eq!(
        code(&boolnet(&[
            "export-dot",
            "--input",
            c,
            "--what",
            "nope",
            "--out",
            out_s
        ])),
        2
    );
}

#[test]
fn gen_outputs_round_trip() {
    let neg = stdout(&boolnet(&["gen", "--circular", "1", "-"]));
    assert_eq!(neg, "components 1\n0 -> 1\n1 -> 0\n");

    let a = boolnet(&["gen", "--random", "3", "42"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&boolnet(&["gen", "--random", "3", "42"])));
    let f = BooleanNetwork::parse_bn(&stdout(&a)).unwrap();
    assert_eq!(f.width(), 3);
    let file = temp_file(&stdout(&a), ".bn");
    assert_eq!(code(&boolnet(&["analyze", file.path().to_str().unwrap()])), 0);

    let from_sg = BooleanNetwork::parse_bn(&stdout(&boolnet(&["gen", "--andnet", &fixture("and3.sg")]))).unwrap();
    let table = BooleanNetwork::parse_bn(&std::fs::read_to_string(fixture("and3.bn")).unwrap()).unwrap();
    assert_eq!(from_sg, table);

    let circ = stdout(&boolnet(&["gen", "--circular", "3", "+-+"]));
    let file = temp_file(&circ, ".bn");
    let out = stdout(&boolnet(&["analyze", file.path().to_str().unwrap()]));
    assert!(out.contains("circular: negative\n"));
    assert!(out.contains("fixed_points: {}\n"));
}

#[test]
fn graph_subnets_and_dynamics() {
    let out = stdout(&boolnet(&["graph", &fixture("and3.bn")]));
    assert_eq!(out.lines().filter(|l| l.starts_with("# cycle")).count(), 5);
    let reparsed = boolnet::SignedDigraph::parse_sg(&out).unwrap();
    assert_eq!(reparsed.arc_count(), 6);
    let local = stdout(&boolnet(&["graph", &fixture("and3.bn"), "--at", "111"]));
    assert_eq!(boolnet::SignedDigraph::parse_sg(&local).unwrap().arc_count(), 3);

    let out = stdout(&boolnet(&["subnets", &fixture("and3.bn")]));
    assert_eq!(out.lines().count(), 27 - 8);
    assert!(out.lines().last().unwrap().starts_with("I={1,2,3}"));
    let strict = stdout(&boolnet(&["subnets", &fixture("and3.bn"), "--strict", "--eosd"]));
    assert!(strict.is_empty());

    let out = stdout(&boolnet(&["dynamics", &fixture("and3.bn"), "--arcs"]));
    assert!(out.starts_with("arcs: 12\n"));
    assert!(out.contains("111 -> 011\n"));
    assert_eq!(out.lines().filter(|l| l.contains(" -> ")).count(), 12);
}

#[test]
fn theorems_lists_every_id() {
    let o = boolnet(&["theorems"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 38);
    assert!(out.lines().any(|l| l.starts_with("MAIN_EOSD: ")));
    assert!(out.lines().any(|l| l.starts_with("Q2_0CRITICAL_ANDNET: ")));
}
