use serde_json::Value;
use whp_cli::run_with;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("whp").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn hermite_golden() {
    let v = json(&["hermite", "4,2,2,1"]);
    assert_eq!(v["schema"], "whp/1");
    assert_eq!(v["command"], "hermite");
    assert_eq!(v["polynomial"]["text"], "x^9 + x^7 - 7*x^5 - 35*x^3");
    assert_eq!(v["polynomial"]["degree"], 9);
    for method in ["determinant", "characters", "hooks"] {
        let w = json(&["hermite", "4,2,2,1", "--method", method]);
        assert_eq!(w["polynomial"], v["polynomial"]);
    }
    assert_eq!(
        json(&["--json", "hermite", "1,1"])["polynomial"]["text"],
        "x^2 + 1"
    );
}

#[test]
fn core_quotient() {
    let v = json(&["core-quotient", "4,4,2,2,1"]);
    assert_eq!((v["core"].as_str(), v["k"].as_u64()), (Some("1"), Some(1)));
    assert_eq!(
        (v["mu"].as_str(), v["nu"].as_str()),
        (Some("3,2"), Some("1"))
    );
    let v = json(&["core-quotient", "4", "--p", "2"]);
    assert_eq!(
        (v["mu"].as_str(), v["nu"].as_str(), v["k"].as_u64()),
        (Some("-"), Some("2"), Some(0))
    );
    let v = json(&["core-quotient", "3,1", "--p", "3"]);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
}

#[test]
fn partition_info() {
    let v = json(&["partition-info", "3,1", "--show-maya"]);
    assert_eq!(v["size"], 4);
    assert_eq!(v["conjugate"], "2,1,1");
    assert_eq!(v["path_count"], "3");
    assert!(v["maya"]["diagram"].is_string());
}

#[test]
fn remainder_and_appell() {
    let v = json(&["remainder", "4"]);
    assert_eq!(coeffs(&v["remainder"]), ["3", "-6", "1"]);
    assert_eq!(v["subleading_by_content"], "-6");
    assert_eq!(v["subleading_by_quotient"], "-6");
    let v = json(&["appell", "2", "--p", "1"]);
    assert_eq!(v["polynomial"]["text"], "x^2 - 2*x + 1");
    // A_2 = x^2 + 2 z_1 x + z_2
    let v = json(&["appell", "2", "--z", "1,0,-1"]);
    assert_eq!(coeffs(&v["polynomial"]), ["0", "2", "1"]);
}

#[test]
fn character_and_laguerre() {
    let v = json(&["character", "2,2", "--j", "2"]);
    assert_eq!(v["value"], "2");
    assert_eq!(v["equal"], true);
    let v = json(&["laguerre-check", "2,2,1"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["omega"]["equal"], true);
    let v = json(&["laguerre", "--mu", "1", "--nu", "-", "--alpha", "1/2"]);
    assert_eq!(v["polynomial"]["degree"], 1);
    let (code, _, err) = call(&["laguerre", "--mu", "1", "--nu", "1", "--alpha", "0"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn psi_and_coefficients() {
    let v = json(&["psi", "--mu", "-", "--nu", "1"]);
    assert_eq!(v["polynomial"]["variable"], "k");
    assert_eq!(v["polynomial"]["text"], "-2*k - 1");
    let v = json(&["coeff-poly", "--mu", "4,1", "--nu", "3", "--j", "3"]);
    assert_eq!(coeffs(&v["polynomial"]), ["-1230", "1404", "24", "-48"]);
}

#[test]
fn zeros_csv() {
    let dir = std::env::temp_dir().join(format!("whp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zeros.csv");
    let v = json(&["zeros", "4,2,2,1", "--csv", path.to_str().unwrap()]);
    assert_eq!(v["origin_multiplicity"], 3);
    assert_eq!(v["total"], 9);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("re,im,multiplicity"));
    assert_eq!(lines.next(), Some("0,0,3"));
    assert_eq!(lines.count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identity() {
    let v = json(&["identity", "--xs", "2,0"]);
    assert_eq!(
        (v["lhs"].as_str(), v["rhs"].as_str()),
        (Some("0"), Some("0"))
    );
    let (code, _, _) = call(&["identity", "--xs", "1,1"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_is_byte_stable() {
    let (code, a, _) = call(&["verify", "--max-size", "5", "--p", "2,3", "--seed", "3"]);
    assert_eq!(code, 0);
    let (_, b, _) = call(&["verify", "--max-size", "5", "--p", "3,2", "--seed", "3"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert!(v.get("wall_ms").is_none());
    let timed = json(&["verify", "--max-size", "3", "--timings"]);
    assert!(timed["wall_ms"].is_u64());
}

#[test]
fn usage_errors() {
    assert_eq!(call(&[]).0, 1);
    assert_eq!(call(&["bogus"]).0, 1);
    assert_eq!(call(&["hermite", "2,3"]).0, 1);
    assert_eq!(call(&["hermite", "x"]).0, 1);
    assert_eq!(call(&["hermite", "2", "--method", "magic"]).0, 1);
    assert_eq!(call(&["character", "3", "--j", "2"]).0, 1);
    assert_eq!(call(&["verify", "--max-size", "0"]).0, 1);
    assert_eq!(call(&["appell", "2"]).0, 1);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}
