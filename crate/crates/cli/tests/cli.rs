//! The `bicoh` binary: output, files written and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use bicoh::resolve::resolve;
use bicoh_cli::{input, load_module};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn bicoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicoh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn hilbert_of_the_polynomial_ring() {
    let o = bicoh(&["hilbert", &fixture("free_s.mod"), "--window", "0:3,0:3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("p = 32003"));
    assert!(text.lines().any(|l| l.starts_with("  3 |") && l.ends_with("16")));
}

#[test]
fn input_errors_exit_2() {
    let bad = bicoh(&["hilbert", &fixture("bad_poly.mod")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 4"));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position"));
    assert_eq!(bicoh(&["hilbert", &fixture("bad_degree.mod")]).status.code(), Some(2));
    assert_eq!(bicoh(&["hilbert", "/nonexistent.mod"]).status.code(), Some(2));
    assert_eq!(bicoh(&["locoh", &fixture("free_s.mod"), "--theory", "X"]).status.code(), Some(2));
    assert_eq!(bicoh(&["check", "--suite", "cm", &fixture("non_cm.mod")]).status.code(), Some(2));
    assert_eq!(bicoh(&["check", "--suite", "simple", "-m", "0", "-n", "2"]).status.code(), Some(2));
    assert_eq!(bicoh(&["hilbert", &fixture("free_s.mod"), "--window", "3:1,0:0"]).status.code(), Some(2));
}

#[test]
fn suites_pass_with_exit_0() {
    let window = ["--window", "-3:3,-3:3"];
    for (suite, file) in [
        ("free", "free_sum.mod"),
        ("euler", "non_cm.mod"),
        ("cm", "hypersurface.mod"),
        ("corner", "non_cm.mod"),
        ("gencm", "two_planes.mod"),
        ("dimle1", "m1_hypersurface.mod"),
        ("dimle1", "m0_line.mod"),
        ("structure", "generic_hypersurface.mod"),
        ("fiveterm", "non_cm.mod"),
        ("depthles", "non_cm.mod"),
    ] {
        let mut args = vec!["check", "--suite", suite];
        let path = fixture(file);
        args.push(&path);
        args.extend(window);
        let o = bicoh(&args);
        assert_eq!(o.status.code(), Some(0), "{suite} on {file}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
    let simple = bicoh(&["check", "--suite", "simple", "-m", "2", "-n", "2", "--window", "-6:0,0:6"]);
    assert_eq!(simple.status.code(), Some(0));
}

#[test]
fn csv_files_one_per_table() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("q.csv");
    let o = bicoh(&[
        "locoh",
        &fixture("hypersurface.mod"),
        "--theory",
        "Q",
        "--window=-2:0,-3:-2",
        "--csv",
        base.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let h2 = std::fs::read_to_string(dir.path().join("q_H_2_Q_M.csv")).unwrap();
    assert!(h2.starts_with("a,b,dim\n"));
    assert_eq!(h2.lines().count(), 1 + 6);
    assert!(h2.contains("0,-3,2\n"));
    for i in 0..=2 {
        assert!(dir.path().join(format!("q_H_{i}_Q_M.csv")).exists());
    }
    let single = dir.path().join("one.csv");
    let o = bicoh(&["locoh", &fixture("hypersurface.mod"), "--theory", "Q", "-i", "2", "--csv", single.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(single.exists());
}

#[test]
fn emitted_presentation_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("min.mod");
    for file in ["non_cm.mod", "free_sum.mod", "two_planes.mod"] {
        let o = bicoh(&["resolve", &fixture(file), "--emit", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let reloaded = load_module(&path).unwrap();
        let original = load_module(std::path::Path::new(&fixture(file))).unwrap();
        let res = resolve(&original);
        assert_eq!(reloaded.generators(), &res.modules()[0]);
        assert_eq!(input::parse_module(&input::write_module(&reloaded)).unwrap(), reloaded);
        for d in bicoh::table::Window::square(3).cells() {
            assert_eq!(reloaded.hilbert(d), original.hilbert(d));
        }
    }
}

#[test]
fn oracle_agrees_and_threads_are_capped() {
    let o = Command::new(env!("CARGO_BIN_EXE_bicoh"))
        .args(["oracle", &fixture("non_cm.mod"), "--theory", "P", "--compare", "--window", "-2:2,-2:2"])
        .env("BICOH_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree"));
    let bad = Command::new(env!("CARGO_BIN_EXE_bicoh"))
        .args(["profile", &fixture("free_s.mod")])
        .env("BICOH_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn scans_and_profile() {
    let o = bicoh(&["profile", &fixture("two_planes.mod")]);
    let text = stdout(&o);
    assert!(text.contains("dim 2") && text.contains("depth 1") && text.contains("generalized cm true"));
    let t = bicoh(&["tame", &fixture("free_s.mod"), "--k", "2", "--jwindow", "0:10"]);
    assert_eq!(t.status.code(), Some(0));
    assert!(stdout(&t).contains("eventually-nonzero"));
    let u = bicoh(&["tame", &fixture("non_cm.mod"), "--k", "1"]);
    assert_eq!(u.status.code(), Some(2));
    let r = bicoh(&["regscan", &fixture("free_s.mod"), "--jwindow", "0:6"]);
    assert!(stdout(&r).contains("reg N_j <= 0*j + 2"));
    let l = bicoh(&["limit", &fixture("generic_hypersurface.mod"), "--jwindow", "0:12"]);
    assert_eq!(l.status.code(), Some(0));
}
