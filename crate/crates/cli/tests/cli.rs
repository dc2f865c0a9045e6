use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dg-forge"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn with_stdin(mut cmd: Command, input: &str) -> Output {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn broken_algebra_fails_validation_with_leibniz_witness() {
    let out = bin().arg("validate").arg(fixture("negative/mat2-broken.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().position(|l| l.starts_with("FAIL") && l.contains("validate/leibniz")).unwrap();
    assert!(text.lines().nth(line + 1).unwrap().contains("(e12, e21)"), "{text}");
}

#[test]
fn goldie_on_kx_passes() {
    let out = bin().args(["goldie", "--format", "json"]).arg(fixture("kx.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let status = |name: &str| {
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == name)
            .map(|c| c["status"].as_str().unwrap().to_string())
    };
    for s in ["goldie/gr-prime", "goldie/gr-goldie", "goldie/dg-simple"] {
        assert_eq!(status(s).as_deref(), Some("pass"), "{s}");
    }
}

#[test]
fn goldie_on_mat2_stops_at_gr_prime() {
    let out = bin().arg("goldie").arg(fixture("mat2-dg.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL    goldie/gr-prime"), "{text}");
    assert!(!text.contains("goldie/dg-simple"));
}

#[test]
fn fixtures_pass_and_are_byte_identical() {
    let run = || bin().args(["fixtures", "--format", "json"]).output().unwrap();
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn same_seed_same_bytes_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["localise", "--format", "json", "--samples", "200", "--seed", "11"];
    let first = bin().args(args).arg(fixture("kx.json")).output().unwrap();
    let second = bin().args(args).arg(fixture("kx.json")).arg("-o").arg(&path).output().unwrap();
    assert_eq!(second.status.code(), Some(0));
    assert!(second.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
    assert!(String::from_utf8(first.stdout).unwrap().contains("\"value\":\"11\""));
}

const TINY: &str = r#"{"version":1,"field":"Q","extra":true,
 "algebra":{"basis":["1"],"degrees":[0],"unit":[1],"mul":[[0,0,0,1]]}}"#;

#[test]
fn strict_mode_and_input_errors() {
    let mut strict = bin();
    strict.args(["validate", "--strict", "-"]);
    let out = with_stdin(strict, TINY);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("extra"));

    let mut lenient = bin();
    lenient.args(["validate", "-"]);
    let out = with_stdin(lenient, TINY);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    let mut bad = bin();
    bad.arg("validate");
    let out = with_stdin(bad, "{\"version\": 1,\n\"field\": [}");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = bin().arg("frobnicate").arg(fixture("kx.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn field_override_changes_the_field() {
    let out = bin()
        .args(["radicals", "--field", "F2", "--format", "json"])
        .arg(fixture("dual-dg.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    // Over F2 the ideal lattice is enumerated and cross-checked.
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"name\":\"radicals/lattice-agrees\",\"status\":\"pass\""), "{text}");
}
