use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlie"))
        .args(args)
        .env_remove("DLIE_SPECIALIZATION_LIMIT")
        .output()
        .expect("run dlie")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn assert_schema(name: &str, v: &Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("timing_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn form_type_a() {
    let out = dlie(&["form", "--type", "A", "--n", "3", "--alpha", "t"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_schema("form.schema.json", &v);
    assert_eq!(v["dimension"], 8);
    assert_eq!(v["basis"].as_array().unwrap().len(), 8);
    assert_eq!(v["construction"], "explicit");
    assert_eq!(v["basis"][3]["E[0,1]"], "r2");
}

#[test]
fn form_square_alpha_is_ineligible() {
    let out = dlie(&["form", "--type", "A", "--alpha", "t^2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha is a square"));
    assert!(out.stdout.is_empty());
}

#[test]
fn form_s3_example() {
    let out = dlie(&[
        "form", "--type", "D4", "--group", "S3", "--alpha", "1 - t^3", "--beta", "1 + r2",
        "--gamma", "t",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_schema("form.schema.json", &v);
    assert_eq!(v["dimension"], 28);
    assert_eq!(v["tower"]["degree"], 6);
}

#[test]
fn form_s3_with_wrong_gamma_names_condition() {
    let out = dlie(&["form", "--type", "D4", "--group", "S3", "--gamma", "2t"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(c)"));
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["form", "--type", "A", "--alpha", "t^"][..],
        &["form", "--type", "A", "--alpha", "1/0"],
        &["oracle", "noncube", "--beta", "1 + r2"],
        &["form", "--type", "B"],
    ] {
        assert_eq!(dlie(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn text_format() {
    let out = dlie(&["form", "--type", "A", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("explicit form of sl3 with group Z2, dimension 8"));
    assert!(s.contains("b7 = (r2)*H[1]"));
}

#[test]
fn verify_default_configurations() {
    for args in [
        &["verify", "--type", "A", "--n", "3", "--alpha", "t"][..],
        &["verify", "--type", "D", "--m", "8", "--alpha", "t"],
        &["verify", "--type", "D4", "--group", "Z3", "--beta", "t"],
    ] {
        let out = dlie(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v = json(&out);
        assert_schema("report.schema.json", &v);
        assert_eq!(v["verdict"], true);
        let eq = v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == "explicit_equals_fixed");
        assert_eq!(eq.unwrap()["passed"], true);
    }
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "--type", "D", "--m", "8"];
    let mut a = json(&dlie(&args));
    let mut b = json(&dlie(&args));
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn verify_all_fast() {
    let out = dlie(&["verify", "--all", "--suite", "fast"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_schema("report-list.schema.json", &v);
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn oracle_noncube_certifies_at_two() {
    let out = dlie(&[
        "oracle", "noncube", "--alpha", "1 - t^3", "--beta", "1 + r2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_schema("noncube.schema.json", &v);
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["certificate"]["t0"], 2);
    assert_eq!(v["certificate"]["d"], "-7");
}

#[test]
fn oracle_noncube_reports_cube_witness() {
    let out = dlie(&["oracle", "noncube", "--beta", "t^3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_schema("noncube.schema.json", &v);
    assert_eq!(v["verdict"], "cube");
    assert_eq!(v["root"], "t");
}

#[test]
fn specialization_limit_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_dlie"))
        .args([
            "oracle", "noncube", "--alpha", "1 - t^3", "--beta", "1 + r2",
        ])
        .env("DLIE_SPECIALIZATION_LIMIT", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "unknown");
}

#[test]
fn oracle_s3check() {
    let out = dlie(&[
        "oracle", "s3check", "--alpha", "1 - t^3", "--beta", "1 + r2", "--gamma", "t",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_schema("s3check.schema.json", &v);
    for k in ["alpha_not_square", "beta_not_cube", "gamma_cubed_is_norm"] {
        assert_eq!(v[k], true, "{k}");
    }

    let out = dlie(&["oracle", "s3check", "--gamma", "2t"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_schema("s3check.schema.json", &v);
    assert_eq!(v["gamma_cubed_is_norm"], false);
    assert_eq!(v["alpha_not_square"], true);
}
