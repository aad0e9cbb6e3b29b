//! End-to-end runs of the `matsuo` binary against golden outputs.
//!
//! Set `MATSUO_UPDATE_GOLDEN=1` to rewrite the files after an intended change.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn matsuo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matsuo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Replaces every `runtime_ms` with 0; nothing else in a report varies.
fn mask(v: &mut Value) {
    match v {
        Value::Object(m) => {
            if let Some(t) = m.get_mut("runtime_ms") {
                *t = Value::from(0);
            }
            m.values_mut().for_each(mask);
        }
        Value::Array(a) => a.iter_mut().for_each(mask),
        _ => {}
    }
}

fn check_golden(name: &str, args: &[&str], code: i32) -> Value {
    let out = matsuo(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut got: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    mask(&mut got);
    let text = serde_json::to_string_pretty(&got).unwrap() + "\n";
    let path = golden_path(name);
    if std::env::var_os("MATSUO_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, want, "{name} differs from golden output");
    got
}

#[test]
fn build_p3() {
    let v = check_golden(
        "build_p3.json",
        &["build", "--space", "P3", "--alpha", "1/2", "--field", "Q"],
        0,
    );
    assert_eq!(v["dim"], 9);
    assert_eq!(v["products"].as_array().unwrap().len(), 45);
}

#[test]
fn build_roots_a3() {
    let v = check_golden(
        "build_a3.json",
        &["build", "--roots", "A3", "--alpha", "1/2", "--field", "Q"],
        0,
    );
    assert_eq!(v["dim"], 6);
}

#[test]
fn build_is_byte_deterministic() {
    let args = ["build", "--group", "sym:5", "--field", "F5"];
    assert_eq!(matsuo(&args).stdout, matsuo(&args).stdout);
}

#[test]
fn verify_thm_an() {
    let v = check_golden("verify_thm_an_n4.json", &["verify", "thm-an", "--n", "4"], 0);
    assert_eq!(v["claim_id"], "thm-an-n4");
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_rank4_w2a3() {
    let v = check_golden("verify_rank4_W2A3.json", &["verify", "rank4-W2A3"], 0);
    let computed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["computed"].as_str().unwrap())
        .collect();
    assert_eq!(&computed[..2], ["3/8", "7/16"]);
}

#[test]
fn verify_pi3_iso() {
    let v = check_golden("verify_pi3_iso.json", &["verify", "pi3-iso", "--field", "Q"], 0);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["description"] == "basis pairs where eta is multiplicative" && c["computed"] == "45"));
}

#[test]
fn verify_char3_chain() {
    check_golden("verify_pi3_char3_chain.json", &["verify", "pi3-char3-chain"], 0);
}

#[test]
fn axes_on_p3() {
    let dir = std::env::temp_dir().join(format!("matsuo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("p3.json");
    std::fs::write(&file, matsuo(&["build", "--space", "P3"]).stdout).unwrap();
    let v = check_golden("axes_p3.json", &["axes", file.to_str().unwrap(), "--alpha", "1/2"], 0);
    assert_eq!(v["axes"], 9);
    for e in v["elements"].as_array().unwrap() {
        let dims: Vec<u64> = e["dims"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d[1].as_u64().unwrap())
            .collect();
        assert_eq!(dims, [1, 4, 4]);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn axes_on_one_dimensional_algebra() {
    let dir = std::env::temp_dir().join(format!("matsuo-cli-one-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("one.json");
    let doc = r#"{"field":"Q","dim":1,"labels":["e"],"products":[{"i":0,"j":0,"terms":[[0,"1/1"]]}]}"#;
    std::fs::write(&file, doc).unwrap();
    let out = matsuo(&["axes", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let dims: Vec<u64> = v["elements"][0]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d[1].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 0, 0]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["build", "--space", "P3", "--alpha", "1", "--field", "Q"][..],
        &["build", "--space", "P3", "--alpha", "0"],
        &["build", "--roots", "A3", "--field", "F2"],
        &["build", "--space", "P3", "--roots", "A3"],
        &["verify", "no-such-claim"],
        &["axes", "/nonexistent/file.json"],
    ] {
        let out = matsuo(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let err = String::from_utf8(matsuo(&["verify", "no-such-claim"]).stderr).unwrap();
    assert!(err.contains("thm-an") && err.contains("root-projections"), "{err}");
    let err = String::from_utf8(matsuo(&["build", "--roots", "A3", "--field", "F2"]).stderr).unwrap();
    assert!(err.contains("characteristic 2"), "{err}");
}

#[test]
fn failing_claim_exits_1() {
    // The k = 2 images of the rank-4 generators cover W_2(A3~) twice, so the
    // group-order checks of this claim do not hold.
    let out = matsuo(&["verify", "embedding"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn enumerate_g4_csv() {
    for strategy in ["hlt", "felsch"] {
        let out = matsuo(&["enumerate", "G4", "--strategy", strategy]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        // Header plus one row per coset.
        assert_eq!(text.lines().count(), 6912 + 1, "{strategy}");
    }
}

#[test]
fn space_json() {
    let out = matsuo(&["space", "--group", "3sq2"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"], 9);
    assert_eq!(v["lines"].as_array().unwrap().len(), 12);
}
