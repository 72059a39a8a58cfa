use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronquiver")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(run(d, &["gen", "P:2", "--out", "p.json"]).status.success());
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("p.json")).unwrap()).unwrap();
    assert_eq!((rep["d1"].as_u64(), rep["d0"].as_u64()), (Some(2), Some(3)));
    assert_eq!(stdout(&run(d, &["decompose", "--input", "p.json"])), "P(2)\n");

    let o = run(d, &["gen", "debruijn:2:2"]);
    let q: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((q["vertices"].as_array().unwrap().len(), q["arrows"].as_array().unwrap().len()), (4, 8));

    assert!(run(d, &["gen", "R:xy", "--out", "r.json"]).status.success());
    let rep: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("r.json")).unwrap()).unwrap();
    assert_eq!((rep["d1"].as_u64(), rep["d0"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    run(d, &["gen", "tree:3:2", "--out", "t.json"]);
    let dot = stdout(&run(d, &["export", "--input", "t.json", "--format", "dot"]));
    assert!(dot.contains("\"(0,0)\" -> \"(0,0)\""));

    std::fs::write(d.join("empty.json"), "{\"vertices\": [], \"arrows\": []}").unwrap();
    assert_eq!(stdout(&run(d, &["export", "--input", "empty.json", "--format", "dot"])), "digraph {\n}\n");

    // P(2) + R((t+1)^2) written by hand
    let rep = r#"{"field": "GF(2)", "d1": 4, "d0": 5,
        "F": [[1,0,0,0],[0,1,0,0],[0,0,0,0],[0,0,1,0],[0,0,0,1]],
        "G": [[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,1,1]]}"#;
    std::fs::write(d.join("sum.json"), rep).unwrap();
    assert_eq!(stdout(&run(d, &["export", "--input", "sum.json"])), "P(2) ⊕ R((t+1)^2)\n");

    std::fs::write(d.join("bad.json"), "{\"nothing\": 1}").unwrap();
    assert_eq!(run(d, &["export", "--input", "bad.json"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for args in [
        &["verify", "preinj", "--max-n", "3"][..],
        &["verify", "preproj"],
        &["verify", "regular", "--field", "GF(3)"],
        &["verify", "embed", "--count", "20"],
        &["verify", "linearise", "--field", "GF(4)"],
        &["verify", "pathalg", "--max-len", "3"],
        &["verify", "pathalg", "--ring", "Z/4", "--max-len", "3"],
    ] {
        let o = run(d, args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(report["passed"], true);
    }
}

#[test]
fn injected_fault_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    for seed in ["0", "1", "2", "3"] {
        for suite in ["preproj", "preinj", "regular", "linearise"] {
            let o = run(dir.path(), &["verify", suite, "--inject-fault", "--seed", seed]);
            assert_eq!(o.status.code(), Some(1), "{suite} seed {seed}");
            let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
            assert_eq!(report["passed"], false);
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for args in [
        &["gen", "Q:1"][..],
        &["gen", "P:x"],
        &["--field", "GF(6)", "gen", "P:1"],
        &["decompose", "--input", "missing.json"],
        &["verify", "nothing"],
        &["frobnicate"],
    ] {
        assert_eq!(run(d, args).status.code(), Some(2), "{args:?}");
    }
    run(d, &["gen", "P:12", "--out", "big.json"]);
    assert_eq!(run(d, &["forget", "--input", "big.json", "--cap", "1000"]).status.code(), Some(2));
}

#[test]
fn byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for args in [&["verify", "embed", "--seed", "5", "--field", "GF(3)"][..], &["gen", "debruijn:3:2", "--format", "dot"]] {
        assert_eq!(run(d, args).stdout, run(d, args).stdout);
    }
    run(d, &["gen", "I:2", "--out", "a.json"]);
    run(d, &["forget", "--input", "a.json", "--out", "q1.json"]);
    run(d, &["forget", "--input", "a.json", "--out", "q2.json"]);
    assert_eq!(std::fs::read(d.join("q1.json")).unwrap(), std::fs::read(d.join("q2.json")).unwrap());
}

#[test]
fn linearise_and_pathalg() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    run(d, &["gen", "linear:3", "--out", "a3.json"]);
    assert!(run(d, &["linearise", "--quiver", "a3.json", "--out", "l.json"]).status.success());
    assert_eq!(stdout(&run(d, &["decompose", "--input", "l.json"])), "P(2)\n");
    run(d, &["linearise", "--quiver", "a3.json", "--dual", "--out", "c.json"]);
    assert_eq!(stdout(&run(d, &["decompose", "--input", "c.json"])), "I(2)\n");

    run(d, &["gen", "cyclic:2", "--out", "c2.json"]);
    let o = run(d, &["pathalg", "--quiver", "c2.json", "--ring", "Z/4", "--max-len", "3", "--compare"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([2, 2, 2, 2]));
}
