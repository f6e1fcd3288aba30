use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn liedef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liedef")).args(args).output().expect("binary runs")
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn exported(dir: &Path) -> PathBuf {
    let out = liedef(&["corpus", "export", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    dir.join("e2.json")
}

#[test]
fn oracle_exit_codes_follow_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let e2 = exported(dir.path());
    let e2 = e2.to_str().unwrap();
    let lin = liedef(&["oracle", e2, "--presentation", "linear"]);
    assert_eq!(lin.status.code(), Some(0));
    assert!(text(&lin.stdout).contains("verdict: Definable"));
    let sc = liedef(&["oracle", e2, "--presentation", "simply-connected"]);
    assert_eq!(sc.status.code(), Some(1));
    assert!(text(&sc.stdout).contains("non-real weight"));
}

#[test]
fn emitted_certificates_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let e2 = exported(dir.path());
    let e2 = e2.to_str().unwrap();
    let cert = dir.path().join("e2.tbc.json");
    let c = cert.to_str().unwrap();
    assert_eq!(liedef(&["tbc-find", e2, "--cert-out", c]).status.code(), Some(0));
    let ok = liedef(&["verify-cert", e2, c]);
    assert_eq!(ok.status.code(), Some(0), "{}", text(&ok.stderr));

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    v["payload"]["k"][0][0] = "2".into();
    std::fs::write(&cert, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let bad = liedef(&["verify-cert", e2, c]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(text(&bad.stdout).contains("canonical-basis") || text(&bad.stderr).contains("canonical-basis"));
}

#[test]
fn malformed_input_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\n  \"dim\": 2,\n  \"labels\": [\"X\", \"Y\"],\n  \"brackets\": [{\"i\": 0, \"j\": 1, \"v\": [\"1\", \"one\"]}]\n}\n").unwrap();
    let out = liedef(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = text(&out.stderr);
    assert!(err.contains("brackets[0].v[1]"), "{err}");

    std::fs::write(&p, "{\n  \"labels\": [\"X\"]\n}\n").unwrap();
    let out = liedef(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = text(&out.stderr);
    assert!(err.contains("dim") && err.contains("line 3"), "{err}");
}

#[test]
fn corpus_run_passes() {
    let out = liedef(&["corpus", "run"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stdout));
}
