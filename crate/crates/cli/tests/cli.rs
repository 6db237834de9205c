use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loophopf")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn binom_examples() {
    let out = run(&["binom", "--p", "3", "--m", "2", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("binom=0 carries=1"));
    let out = run(&["binom", "--p", "5", "--m", "1", "--n", "1"]);
    assert_eq!(stdout(&out).lines().next(), Some("binom=2 carries=0"));
    assert_eq!(code(&run(&["binom", "--p", "2", "--m", "0", "--n", "5"])), 2);
    assert_eq!(code(&run(&["binom", "--p", "6", "--m", "1", "--n", "1"])), 2);
}

#[test]
fn build_verify_classify() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    let out = run(&["build", "--family", "ld", "--p", "2", "--n", "2", "--d", "1", "--out", path(&t)]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&t).unwrap();
    assert!(text.contains(r#""N":4"#));
    let doc = loop_hopf::table_file::from_json(&text).unwrap();
    assert_eq!(doc.entry(2, 2), &doc.basis(1));

    let out = run(&["verify", path(&t), "--report"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("commutative: PASS"));
    let out = run(&["classify", path(&t)]);
    assert_eq!(stdout(&out).trim(), "L(2,1)");

    let g = dir.path().join("g.json");
    assert_eq!(code(&run(&["build", "--family", "graded", "--p", "2", "--n", "3", "--out", path(&g)])), 0);
    assert_eq!(stdout(&run(&["classify", path(&g)])).trim(), "L(3,3)");

    let l = dir.path().join("l.json");
    assert_eq!(code(&run(&["build", "--family", "ld", "--p", "3", "--n", "2", "--d", "0", "--out", path(&l)])), 0);
    assert_eq!(stdout(&run(&["classify", path(&l)])).trim(), "L(2,0)");
}

#[test]
fn bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    assert_eq!(code(&run(&["build", "--family", "ld", "--p", "2", "--n", "1", "--d", "2", "--out", path(&t)])), 2);
    assert_eq!(code(&run(&["build", "--family", "ld", "--p", "2", "--n", "1", "--out", path(&t)])), 2);
    assert!(!t.exists());
    std::fs::write(&t, "{\"p\":2,").unwrap();
    assert_eq!(code(&run(&["verify", path(&t)])), 2);
    assert_eq!(code(&run(&["classify", path(&t)])), 2);
    assert_eq!(code(&run(&["verify", path(&dir.path().join("missing.json"))])), 2);
}

#[test]
fn nc2_candidate_fails_associativity() {
    let dir = tempfile::tempdir().unwrap();
    let nc = dir.path().join("nc.json");
    assert_eq!(code(&run(&["build", "--family", "nc2", "--out", path(&nc)])), 1);
    let out = run(&["verify", path(&nc), "--report"]);
    assert_eq!(code(&out), 1);
    let report = stdout(&out);
    assert!(report.contains("associativity: FAIL at (1,2,2)"));
    assert!(report.contains("commutative: FAIL at (1,2)"));
    assert_eq!(code(&run(&["classify", path(&nc)])), 1);
    assert_eq!(code(&run(&["antipode", path(&nc)])), 1);
}

#[test]
fn endo_examples() {
    let out = run(&["endo", "--p", "5", "--N", "4", "--lambda", "1,1", "--apply", "2"]);
    assert_eq!(stdout(&out).trim(), "1*a1 + 1*a2");
    let out = run(&["endo", "--p", "5", "--N", "4", "--lambda", "1", "--invert"]);
    assert_eq!(stdout(&out).trim(), "1");
    assert_eq!(code(&run(&["endo", "--p", "5", "--N", "4", "--lambda", "0,1", "--invert"])), 1);
    let out = run(&["endo", "--p", "5", "--N", "4", "--lambda", "1,1", "--invert"]);
    assert_eq!(stdout(&out).trim(), "1,4,2");
    let out = run(&["endo", "--p", "3", "--N", "4", "--lambda", "1,1", "--compose", "2"]);
    assert_eq!(stdout(&out).trim(), "2,1");
    assert_eq!(code(&run(&["endo", "--p", "5", "--N", "4", "--lambda", "7"])), 2);
    assert_eq!(code(&run(&["endo", "--p", "5", "--N", "4", "--lambda", "1", "--apply", "4"])), 2);
}

#[test]
fn integral_and_antipode() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    run(&["build", "--family", "ld", "--p", "2", "--n", "1", "--d", "0", "--out", path(&a)]);
    let out = run(&["integral", path(&a)]);
    assert_eq!(stdout(&out).lines().next(), Some("t = 1*a0 + 1*a1, eps(t) = 1, dim ∫ = 1"));

    let b = dir.path().join("b.json");
    run(&["build", "--family", "ld", "--p", "2", "--n", "2", "--d", "1", "--out", path(&b)]);
    assert!(stdout(&run(&["integral", path(&b)])).contains("semisimple: no"));

    let g = dir.path().join("g.json");
    run(&["build", "--family", "graded", "--p", "2", "--n", "2", "--out", path(&g)]);
    let out = run(&["antipode", path(&g)]);
    assert_eq!(code(&out), 0);
    let rows: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1], "0 1 0 0");
}
