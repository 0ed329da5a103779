//! End-to-end runs of the binary against golden files.
//!
//! Regenerate goldens with `UPDATE_GOLDEN=1 cargo test -p superwhit --test cli`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn alg(name: &str) -> String {
    root().join("algebras").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_superwhit"));
    cmd.args(args).env_remove("WHITTAKER_WINDOW");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("failed to spawn superwhit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Drop the wall-clock line so reports compare byte for byte.
fn without_runtime(s: &str) -> String {
    s.lines().filter(|l| !l.contains("\"runtime_ms\"")).map(|l| format!("{l}\n")).collect()
}

fn assert_golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "output differs from golden {name}");
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("terminated by signal")
}

#[test]
fn symbolic_json_report() {
    let o = run(&["whittaker", "sl12", "--mode", "symbolic", "--window", "6", "--emit", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // top-level fields in schema order
    let keys: Vec<&str> = out
        .lines()
        .filter_map(|l| l.strip_prefix("  \""))
        .filter_map(|l| l.split_once('"').map(|(k, _)| k))
        .collect();
    assert_eq!(
        keys,
        [
            "algebra",
            "params",
            "window",
            "dim_wh0",
            "wh0_basis",
            "dim_wh",
            "wh_basis",
            "verdict",
            "equations_checked",
            "runtime_ms"
        ]
    );
    assert_eq!(v["dim_wh0"], 4);
    assert_eq!(v["dim_wh"], 1);
    assert_eq!(v["verdict"], "Simple");
    assert_golden("whittaker_symbolic.json", &without_runtime(&out));
}

#[test]
fn symbolic_text_report() {
    let o = run(&["whittaker", "sl12", "--window", "4"]);
    assert_eq!(code(&o), 0);
    assert_golden("whittaker_symbolic.txt", &stdout(&o));
}

#[test]
fn generic_specialization_with_c_equal_two() {
    let o = run(&["whittaker", "sl12", "--spec", "a=3,b=1/2,c=2", "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim_wh"], 1);
    assert_eq!(v["verdict"], "Simple");
    assert_golden("whittaker_a3_b1-2_c2.json", &without_runtime(&out));
}

#[test]
fn atypical_specialization_is_not_simple() {
    // b = c (c - 2) gives a second Whittaker vector.
    let o = run(&["whittaker", "sl12", "--spec", "a=1,b=0,c=2", "--window", "6", "--emit", "json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim_wh"], 2);
    assert_eq!(v["verdict"], "NotSimple");
    assert_golden("whittaker_a1_b0_c2.json", &without_runtime(&out));
}

#[test]
fn reports_are_deterministic() {
    let args = ["whittaker", "sl12", "--spec", "a=-2/3,b=5,c=7/2", "--emit", "json"];
    let first = without_runtime(&stdout(&run(&args)));
    let second = without_runtime(&stdout(&run(&args)));
    assert!(!first.is_empty());
    assert_eq!(first, second);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = run(&["whittaker", "sl12", "--window", "3", "--emit", "json", "--output", p]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["window"], 3);
}

#[test]
fn verify_reports_mismatches_with_exit_one() {
    for name in ["verify", "verify-paper"] {
        let o = run(&[name, "--mode", "symbolic"]);
        assert_eq!(code(&o), 1, "{name}");
        assert_golden("verify_symbolic.txt", &stdout(&o));
        assert!(stdout(&o).contains("equations matched: 6/8"));
    }
}

#[test]
fn verify_json() {
    let o = run(&["verify", "--emit", "json", "--window", "4"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equations_matched"], "6/8");
    assert_eq!(v["passed"], 14);
    assert_eq!(v["total"], 16);
}

#[test]
fn small_window_exits_three() {
    let o = run(&["whittaker", "sl12", "--window", "1"]);
    assert_eq!(code(&o), 3);
    assert_golden("window_too_small.stderr", &stderr(&o));
    let o = run(&["verify", "--window", "1"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn window_from_environment() {
    let o = run_env(&["whittaker", "sl12", "--emit", "json"], &[("WHITTAKER_WINDOW", "2")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["window"], 2);
    let o = run_env(&["whittaker", "sl12"], &[("WHITTAKER_WINDOW", "1")]);
    assert_eq!(code(&o), 3);
    // the flag wins over the environment
    let o = run_env(&["whittaker", "sl12", "--window", "3", "--emit", "json"], &[("WHITTAKER_WINDOW", "1")]);
    assert_eq!(code(&o), 0);
    let o = run(&["whittaker", "sl12", "--emit", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["window"], 6);
}

#[test]
fn invalid_input_exits_two() {
    let cases: &[&[&str]] = &[
        &["whittaker", "sl12", "--spec", "a=0,b=1,c=1"],
        &["whittaker", "sl12", "--spec", "a=1,b=1"],
        &["whittaker", "sl12", "--spec", "a=1,b=1,c=1,d=2"],
        &["whittaker", "sl12", "--spec", "a=x,b=1,c=1"],
        &["whittaker", "sl12", "--window", "0"],
        &["whittaker", "gl3"],
        &["whittaker", "sl12", "--mode", "symbolic", "--spec", "a=1,b=1,c=1"],
        &["check-algebra", "--builtin", "so5"],
        &["check-algebra", "--file", "/nonexistent.alg"],
        &["check-algebra"],
        &["no-such-command"],
    ];
    for args in cases {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn broken_algebra_exits_two_with_witness() {
    let o = run(&["check-algebra", "--file", &alg("broken.alg")]);
    assert_eq!(code(&o), 2);
    assert_golden("check_broken.stderr", &stderr(&o));
    assert!(stderr(&o).contains("(h, x1)"));
}

#[test]
fn check_algebra_accepts_valid_files() {
    for f in ["sl12.alg", "heisenberg.alg", "heisenberg2.alg"] {
        let o = run(&["check-algebra", "--file", &alg(f)]);
        assert_eq!(code(&o), 0, "{f}: {}", stderr(&o));
    }
    let o = run(&["check-algebra", "--builtin", "sl12"]);
    assert_eq!(stdout(&o), "ok: 8 generators (4 even, 4 odd), all axioms hold\n");
}

#[test]
fn roots_of_sl12() {
    let o = run(&["roots", "--builtin", "sl12"]);
    assert_eq!(code(&o), 0);
    assert_golden("roots_sl12.txt", &stdout(&o));
    let from_file = run(&["roots", "--file", &alg("sl12.alg"), "--cartan", "h,z"]);
    assert_eq!(stdout(&from_file), stdout(&o));
    let o = run(&["roots", "--builtin", "sl12", "--emit", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn roots_need_a_cartan_for_files() {
    assert_eq!(code(&run(&["roots", "--file", &alg("sl12.alg")])), 2);
    // x1 is not semisimple
    assert_eq!(code(&run(&["roots", "--file", &alg("sl12.alg"), "--cartan", "x1"])), 2);
}

#[test]
fn i_psi_on_heisenberg() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("ipsi.mod");
    let o = run(&["i-psi", "--file", &alg("heisenberg.alg"), "--psi", "w=3", "--output", table.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_golden("i_psi_heisenberg.txt", &stdout(&o));
    // the written table feeds back into `blocks`
    let o = run(&["blocks", "--file", &alg("heisenberg.alg"), "--module", table.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("1 block(s)"));
}

#[test]
fn i_psi_trivial_on_odd_brackets() {
    let o = run(&["i-psi", "--file", &alg("heisenberg2.alg"), "--psi", "w=0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim: 1\n"));
    // psi must vanish on odd generators
    assert_eq!(code(&run(&["i-psi", "--file", &alg("heisenberg.alg"), "--psi", "u=1"])), 2);
}

#[test]
fn blocks_of_a_direct_sum() {
    let o = run(&["blocks", "--file", &alg("heisenberg.alg"), "--module", &alg("heisenberg_sum.mod")]);
    assert_eq!(code(&o), 0);
    assert_golden("blocks_heisenberg_sum.txt", &stdout(&o));
}

#[test]
fn help_mentions_every_command() {
    let o = run(&["--help"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for c in ["check-algebra", "roots", "i-psi", "blocks", "whittaker", "verify"] {
        assert!(out.contains(c), "{c}");
    }
}
