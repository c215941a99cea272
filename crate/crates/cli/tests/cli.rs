use std::process::Command;

fn jordanian(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jordanian")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn zero_order_is_a_usage_error() {
    let (code, _, err) = jordanian(&["verify", "--order", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("--order"));
}

#[test]
fn majid_off_the_midpoint_fails_with_its_order() {
    let (code, out, _) = jordanian(&["verify", "--checks", "majid", "--u", "1/4", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for r in reports {
        assert_eq!(r["status"], "fail");
        assert_eq!(r["first_residual_order"], 1);
        assert_eq!(r["u"], "1/4");
    }
}

#[test]
fn selected_checks_pass_and_sort_by_name() {
    let dir = std::env::temp_dir().join(format!("jordanian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, _, _) = jordanian(&[
        "verify",
        "--order",
        "4",
        "--checks",
        "twist,family-relation,majid",
        "--u",
        "1/2",
        "--u",
        "2",
        "--report",
        path.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let reports = v["reports"].as_array().unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r["check"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    // majid holds only at u = 1/2
    assert_eq!(code, 1);
    assert_eq!(v["summary"]["failed"], 2);
    assert!(reports.iter().filter(|r| r["check"] != "majid").all(|r| r["status"] == "pass"));
    assert!(reports.iter().all(|r| r["N"] == 4));
}

#[test]
fn reports_are_stable_for_a_fixed_seed() {
    let args = ["ode-check", "--samples", "20", "--seed", "7", "--u", "1/2", "--format", "csv"];
    let (code, a, _) = jordanian(&args);
    let (_, b, _) = jordanian(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert!(a.starts_with("check,family,u,N,status"));
}

#[test]
fn expand_prints_the_base_twist() {
    let (code, out, _) = jordanian(&["expand", "F0", "--order", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "1/1 * kappa^-0 * P0^0 P1^0 D^0 ⊗ P0^0 P1^0 D^0",
            "1/1 * kappa^-1 * P0^1 P1^0 D^0 ⊗ P0^0 P1^0 D^1",
            "1/2 * kappa^-2 * P0^2 P1^0 D^0 ⊗ P0^0 P1^0 D^1",
            "1/2 * kappa^-2 * P0^2 P1^0 D^0 ⊗ P0^0 P1^0 D^2",
        ]
    );
    let (_, zero, _) = jordanian(&["expand", "F0", "--order", "0"]);
    assert_eq!(zero.trim(), "1/1 * kappa^-0 * P0^0 P1^0 D^0 ⊗ P0^0 P1^0 D^0");
}

#[test]
fn expand_twisted_coproduct_in_json() {
    let (code, out, _) =
        jordanian(&["expand", "coproduct:P1", "--family", "R", "--u", "1/2", "--order", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let terms = v["terms"].as_array().unwrap();
    let mut first: Vec<(String, String)> = terms
        .iter()
        .filter(|t| t["kappa_pow"] == 1)
        .map(|t| (t["term"].as_str().unwrap().to_string(), t["coefficient"].as_str().unwrap().to_string()))
        .collect();
    first.sort();
    // (u P1 ⊗ P0 - (1-u) P0 ⊗ P1) / kappa
    assert_eq!(
        first,
        [
            ("P0^0 P1^1 D^0 ⊗ P0^1 P1^0 D^0".to_string(), "1/2".to_string()),
            ("P0^1 P1^0 D^0 ⊗ P0^0 P1^1 D^0".to_string(), "-1/2".to_string()),
        ]
    );
    let (code, _, err) = jordanian(&["expand", "nonsense"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown expression"));
}

#[test]
fn star_amplitude_and_trivial_product() {
    let (code, out, _) =
        jordanian(&["star", "--u", "0.5", "--kappa", "1", "--v", "1,0", "--k", "1,0", "--q", "1,0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["outputs"]["amplitude"].as_f64().unwrap() - 0.8).abs() < 1e-12);
    assert_eq!(v["op"], "star");
    assert_eq!(v["params"]["n"], 2);

    let (code, out, _) = jordanian(&["star", "--u", "0", "--k", "1,0", "--q", "0,0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outputs"]["dvec"], serde_json::json!([1.0, 0.0]));
    assert_eq!(v["outputs"]["amplitude"], 1.0);

    let (_, csv, _) = jordanian(&["star", "--u", "1/4", "--k", "0.1,0.2", "--q", "0.3,0", "--format", "csv"]);
    assert_eq!(csv.lines().next().unwrap(), "k0,k1,q0,q1,D0,D1,amplitude");
}

#[test]
fn ode_check_meets_the_tolerance() {
    let (code, out, _) = jordanian(&["ode-check", "--samples", "100", "--seed", "42", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for r in v["reports"].as_array().unwrap() {
        assert!(r["max_residual"].as_f64().unwrap() < 1e-9, "{r}");
    }
}
