use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftalg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (out.status.code().unwrap(), v)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn info_on_a_point() {
    let (code, v) = json(&["info", path(&fixture("point.quiver"))]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["results"]["dim"], 1);
    assert_eq!(v["results"]["gldim"], "0");
    assert_eq!(v["results"]["domdim"], "inf");
    assert_eq!(v["inputs"].as_object().unwrap().len(), 1);
}

#[test]
fn info_text_on_the_square() {
    let out = run(&["info", path(&fixture("square.quiver"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("status: ok\n"));
    for line in ["dim: 9", "domdim: 1", "gldim: 2", "projective_injective: [\"1\"]"] {
        assert!(text.lines().any(|l| l == line), "missing {:?} in\n{}", line, text);
    }
}

#[test]
fn written_files_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let gamma = fixture("first_gamma.quiver");
    let (code, _) = json(&["run", path(&gamma), "shift", "-k", "1", "--out", path(dir.path())]);
    assert_eq!(code, 0);
    let quiver = dir.path().join("shifted_1.quiver");
    let module = dir.path().join("shifted_1.module");
    let (code, v) = json(&["info", path(&quiver)]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["dim"], 14);
    assert_eq!(v["results"]["gldim"], "2");
    let (code, v) = json(&["run", path(&gamma), "verify-tilting", "--module", path(&module)]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdict"], "True");
    // The module file records the hash of its algebra.
    let (code, v) = json(&["run", path(&fixture("square.quiver")), "verify-tilting", "--module", path(&module)]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "error");
}

#[test]
fn reports_are_reproducible() {
    let args = ["--json", "--seed", "7", "run", "crates/core/fixtures/auslander_a3.quiver", "iterate"];
    let here = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let go = || Command::new(env!("CARGO_BIN_EXE_shiftalg")).current_dir(&here).args(args).output().unwrap();
    let (a, b) = (go(), go());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["info", "no/such/file.quiver"]).status.code(), Some(3));
    assert_eq!(run(&["run", path(&fixture("a2.quiver")), "bogus"]).status.code(), Some(3));
    assert_eq!(run(&["--field-override", "F6", "info", path(&fixture("a2.quiver"))]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.quiver");
    std::fs::write(&bad, "vertex 1\narrow a 1 2\n").unwrap();
    assert_eq!(run(&["info", path(&bad)]).status.code(), Some(3));
    // The intermediate-extension check is refused at k = d.
    let (code, v) = json(&["run", path(&fixture("square.quiver")), "intext", "-k", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["intermediate_extension_matches"], false);
}

#[test]
fn tasks_on_small_algebras() {
    let (code, v) = json(&["run", path(&fixture("auslander_a3.quiver")), "ag-check"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["families"]["relation"], "Equal");
    let (code, v) = json(&["run", path(&fixture("first_gamma.quiver")), "intext", "-k", "1", "--side", "coshifted"]);
    assert_eq!(code, 0, "{}", v);
    let (code, _) = json(&["run", path(&fixture("first_gamma.quiver")), "mt"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["--field-override", "F7", "run", path(&fixture("a2.quiver")), "shift"]);
    assert_eq!(code, 0);
}
