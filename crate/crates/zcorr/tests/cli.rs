//! End-to-end tests of the `zcorr` binary: exit codes, JSON shapes, determinism.

use std::process::Command;

const PHI_PLUS: &str =
    r#"{"alpha":0.7071067811865476,"beta":0,"gamma":0,"delta":0.7071067811865476,"phi":0,"kappa":0,"lambda":0}"#;
const SIGMA_Z: &str = r#"{"center":0,"eps":1,"offdiag":0,"phase":0}"#;

fn zcorr_env(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zcorr"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn zcorr(args: &[&str]) -> (i32, String, String) {
    zcorr_env(args, &[])
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("stdout is JSON")
}

#[test]
fn construct_succeeds_with_expected_shape() {
    let (code, stdout, _) = zcorr(&["construct", "--state", PHI_PLUS]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["case"], "3.1.2(iv-b)");
    assert_eq!(v["passed"], true);
    assert!(v["correlation"]["covariance"].as_f64().unwrap().abs() < 1e-12);
    for key in ["qa", "rb", "free_choices", "state", "xi", "tol"] {
        assert!(!v[key].is_null(), "missing {key}");
    }
    assert_eq!(v["free_choices"]["r"]["constrained"], true);
}

#[test]
fn construct_honors_the_preferred_option() {
    let state = r#"{"alpha":0.7,"beta":0.5,"gamma":0.3,"delta":0.41231056256176607,"phi":0,"kappa":0,"lambda":0}"#;
    let (code_a, out_a, _) = zcorr(&["construct", "--state", state]);
    let (code_b, out_b, _) =
        zcorr(&["construct", "--state", state, "--prefer-option", "B"]);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(json(&out_a)["case"], "3.1.2(i-A)");
    assert_eq!(json(&out_b)["case"], "3.1.2(i-B)");
}

#[test]
fn construct_accepts_amplitude_form_and_files() {
    let inline = r#"{"amplitudes":[[0.6,0],[0,0],[0,0],[0,0.8]]}"#;
    let (code, stdout, _) = zcorr(&["construct", "--state", inline]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["passed"], true);

    let path = std::env::temp_dir().join(format!("zcorr-cli-{}.json", std::process::id()));
    std::fs::write(&path, inline).unwrap();
    let arg = format!("@{}", path.display());
    let (code, from_file, _) = zcorr(&["construct", "--state", &arg]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(from_file, stdout);
}

#[test]
fn verify_gates_on_the_covariance() {
    let (code, stdout, _) = zcorr(&[
        "verify", "--state", PHI_PLUS, "--qa", SIGMA_Z, "--rb", SIGMA_Z,
    ]);
    assert_eq!(code, 1);
    let v = json(&stdout);
    assert_eq!(v["passed"], false);
    assert!((v["correlation"]["covariance"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let (code, stdout, _) = zcorr(&[
        "verify", "--state", PHI_PLUS, "--qa", SIGMA_Z, "--rb", SIGMA_Z, "--tol", "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["passed"], true);
}

#[test]
fn tol_env_var_applies_and_flag_wins() {
    let args = ["verify", "--state", PHI_PLUS, "--qa", SIGMA_Z, "--rb", SIGMA_Z];
    let (code, stdout, _) = zcorr_env(&args, &[("ZCORR_TOL", "2")]);
    assert_eq!(code, 0, "env tolerance should let covariance 1 pass");
    assert_eq!(json(&stdout)["tol"], 2.0);

    let mut with_flag = args.to_vec();
    with_flag.extend(["--tol", "1e-10"]);
    let (code, stdout, _) = zcorr_env(&with_flag, &[("ZCORR_TOL", "2")]);
    assert_eq!(code, 1, "explicit flag must override the environment");
    assert_eq!(json(&stdout)["tol"], 1e-10);
}

#[test]
fn classify_reports_branch_and_separability() {
    let (code, stdout, _) = zcorr(&["classify", "--state", PHI_PLUS]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["case"], "3.1.2(iv-b)");
    assert_eq!(v["is_separable"], false);
    assert!((v["determinant_magnitude"].as_f64().unwrap() - 0.5).abs() < 1e-12);

    let product = r#"{"alpha":0.5,"beta":0.5,"gamma":0.5,"delta":0.5,"phi":0,"kappa":0,"lambda":0}"#;
    let (code, stdout, _) = zcorr(&["classify", "--state", product]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["case"], "3.4.1");
    assert_eq!(v["is_separable"], true);
}

#[test]
fn bell_subcommand_covers_all_four_states() {
    for name in ["phi+", "phi-", "psi+", "psi-"] {
        let (code, stdout, _) = zcorr(&["bell", "--state", name]);
        assert_eq!(code, 0, "{name}");
        let v = json(&stdout);
        assert_eq!(v["passed"], true);
        assert_eq!(v["bell"], name);
        assert_eq!(v["representation"], "signed");
    }
    let (code, stdout, _) = zcorr(&["bell", "--state", "phi-", "--canonical", "--scale", "2.5"]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["representation"], "canonical");
    assert_eq!(v["case"], "3.2.2");
}

#[test]
fn random_test_is_byte_deterministic() {
    let args = ["random-test", "--n", "300", "--seed", "11", "--mode", "mixed"];
    let (code1, out1, _) = zcorr(&args);
    let (code2, out2, _) = zcorr(&args);
    assert_eq!((code1, code2), (0, 0));
    assert_eq!(out1, out2, "same seed and flags must give identical bytes");
    let v = json(&out1);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["trials"], 300);
    assert!(v.get("elapsed_ms").is_none(), "timing must stay out of JSON");

    let (_, other_seed, _) =
        zcorr(&["random-test", "--n", "300", "--seed", "12", "--mode", "mixed"]);
    assert_ne!(out1, other_seed);
}

#[test]
fn random_test_classical_mode_holds_the_floor() {
    let (code, stdout, _) = zcorr(&[
        "random-test", "--n", "500", "--seed", "3", "--mode", "classical",
    ]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["failures"], 0);
    assert!(v["min_dependence_gap"].as_f64().unwrap() > 0.0);
}

#[test]
fn classical_subcommand_analyzes_distributions() {
    let (code, stdout, _) = zcorr(&[
        "classical", "--dist", r#"{"p":[0.5,0,0,0.5],"x":[1,-1],"y":[1,-1]}"#,
    ]);
    assert_eq!(code, 0);
    let v = json(&stdout);
    assert_eq!(v["is_independent"], false);
    assert!((v["covariance"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["dependence_gap"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let (code, stdout, _) = zcorr(&[
        "classical", "--dist", r#"{"p":[0.25,0.25,0.25,0.25],"x":[0,1],"y":[0,1]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(json(&stdout)["is_independent"], true);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["construct", "--state", "not json"],
        &["construct", "--state", r#"{"alpha":1}"#],
        &["construct", "--state", PHI_PLUS, "--prefer-option", "C"],
        &["verify", "--state", PHI_PLUS, "--qa", "{}", "--rb", SIGMA_Z],
        &["bell", "--state", "omega"],
        &["classical", "--dist", r#"{"p":[0.5,0.5,0.5,0.5],"x":[0,1],"y":[0,1]}"#],
        &["construct", "--state", "@/nonexistent/path.json"],
        &["nonsense-subcommand"],
    ];
    for args in cases {
        let (code, _, stderr) = zcorr(args);
        assert_eq!(code, 2, "args {args:?} gave stderr {stderr}");
        assert!(!stderr.is_empty(), "args {args:?} should explain the error");
    }
    let (code, stdout, _) = zcorr(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("random-test"));
}

#[test]
fn rejected_states_name_the_violation() {
    let heavy = r#"{"alpha":0.8000001,"beta":0,"gamma":0,"delta":0.6,"phi":0,"kappa":0,"lambda":0}"#;
    let (code, _, stderr) = zcorr(&["construct", "--state", heavy]);
    assert_eq!(code, 2);
    assert!(stderr.contains("norm"), "stderr was: {stderr}");
}

#[test]
fn table_format_renders_flat_rows() {
    let (code, stdout, _) = zcorr(&["classify", "--state", PHI_PLUS, "--format", "table"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l.starts_with("case")));
    assert!(!stdout.contains('{'));

    let (code, stdout, _) = zcorr(&[
        "random-test", "--n", "50", "--seed", "1", "--format", "table",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l.starts_with("elapsed_ms")));
}
