use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn liemult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liemult"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn multiplier_of_h2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "h2.lie", "dim 5\n[e1,e2] = e5\n[e3,e4] = e5\n");
    let o = liemult(&["multiplier", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dimM=5 t=5 s=2"), "{}", stdout(&o));
}

#[test]
fn classify_l3414() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "l3414.lie", "dim 4\n[e1,e2] = e3\n[e1,e3] = e4\n");
    let o = liemult(&["classify", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("family=L3414 s=2"));
}

#[test]
fn classify_reports_heisenberg_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h3a2.lie");
    let o = liemult(&["catalog", "HplusA", "3", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = liemult(&["classify", out.to_str().unwrap()]);
    let s = stdout(&o);
    assert!(s.contains("family=HplusA s=2"));
    assert!(s.contains("params=m:3,k:2"));
}

#[test]
fn info_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "l.lie", "dim 6\n[e1,e2] = e4\n[e1,e3] = e5\n");
    let o = liemult(&["info", &f]);
    assert_eq!(
        stdout(&o),
        "n=6\ndimL2=2\ndimZ=3\nclass=2\nlcs=6,2,0\nnilpotent=true\nabelian=false\ndimM=9\nt=6\ns=2\n"
    );
}

#[test]
fn catalog_output_and_sums() {
    let o = liemult(&["catalog", "A", "2"]);
    assert_eq!(stdout(&o), "dim 2\n");
    let o = liemult(&["catalog", "H", "1", "--plus", "A", "1"]);
    assert_eq!(stdout(&o), "dim 4\n[e1,e2] = e3\n");
    let o = liemult(&["catalog", "L4524plusA1"]);
    assert_eq!(stdout(&o), "dim 6\n[e1,e2] = e4\n[e1,e3] = e5\n");
}

#[test]
fn catalog_errors() {
    assert_eq!(liemult(&["catalog", "B"]).status.code(), Some(2));
    assert_eq!(liemult(&["catalog", "H"]).status.code(), Some(2));
    assert_eq!(liemult(&["catalog", "H", "0"]).status.code(), Some(4));
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let syntax = write(dir.path(), "s.lie", "dim 3\n[e1 e2] = e3\n");
    let o = liemult(&["info", &syntax]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:5"));

    let jacobi = write(dir.path(), "j.lie", "dim 3\n[e1,e2] = e2\n[e1,e3] = e3\n[e2,e3] = e1\n");
    assert_eq!(liemult(&["info", &jacobi]).status.code(), Some(3));

    let range = write(dir.path(), "r.lie", "dim 3\n[e1,e2] = e4\n");
    assert_eq!(liemult(&["info", &range]).status.code(), Some(3));

    let abelian = write(dir.path(), "a.lie", "dim 3\n");
    assert_eq!(liemult(&["classify", &abelian]).status.code(), Some(4));

    let solvable = write(dir.path(), "b.lie", "dim 2\n[e1,e2] = e2\n");
    assert_eq!(liemult(&["classify", &solvable]).status.code(), Some(4));

    assert_eq!(liemult(&["info", "/nonexistent/x.lie"]).status.code(), Some(2));
}

#[test]
fn out_of_scope_is_not_a_failure() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "hh.lie", "dim 6\n[e1,e2] = e3\n[e4,e5] = e6\n");
    let o = liemult(&["classify", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status=out_of_scope"));
}

#[test]
fn verify_classification_sweep() {
    let args = [
        "verify", "--suite", "classification", "--max-m", "4", "--max-k", "3", "--seed", "7",
    ];
    let a = liemult(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).ends_with("failed=0 result=pass\n"));
    // byte-identical on rerun
    let b = liemult(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_small_population_fails_size_gate() {
    let o = liemult(&["verify", "--suite", "classification", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("case=c08/population-size status=FAIL"));
}

#[test]
fn verify_other_suites() {
    for suite in ["formulas", "kunneth", "bounds"] {
        let o = liemult(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
    assert_eq!(liemult(&["verify", "--suite", "nope"]).status.code(), Some(2));
}
