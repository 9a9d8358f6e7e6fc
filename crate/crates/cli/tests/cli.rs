use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skeindaha"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf8"))
}

#[test]
fn verify_pi1_succeeds() {
    let (code, text) = run(&["verify", "--suite", "pi1"]);
    assert_eq!(code, 0);
    assert!(text.contains("9 of 9 checks passed"), "{text}");
}

#[test]
fn eval_curve_json_matches_library() {
    let (code, text) = run(&["eval-curve", "--base", "k2", "--twists", "1^2", "--form", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let op = skeindaha::Operator::from_json(&v).unwrap();
    let expect = skeindaha::skein::families::k2_1n(2);
    assert_eq!(op, expect);
}

#[test]
fn bad_generator_exits_with_two() {
    let (code, _) = run(&["eval-word", "--word", "T0 T5"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_flag_exits_with_two() {
    let (code, _) = run(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["--json", "verify", "--suite", "pi1"]);
    let b = run(&["--json", "verify", "--suite", "pi1"]);
    assert_eq!(a, b);
}

#[test]
fn mutate_round_trips_through_seed_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seed.json");
    let p = path.to_str().unwrap();
    let (code, _) = run(&["mutate", "--script", "2,3", "--out", p]);
    assert_eq!(code, 0);
    let (code, text) = run(&["--json", "mutate", "--script", "3,2", "--seed", p]);
    assert_eq!(code, 0);
    let (_, initial) = run(&["--json", "mutate", "--script", "1,1"]);
    assert_eq!(text, initial);
}

#[test]
fn eval_word_e_sided_differs_from_plain() {
    let (_, plain) = run(&["eval-word", "--word", "T0"]);
    let (_, sided) = run(&["eval-word", "--word", "T0", "--e-sided"]);
    assert_ne!(plain, sided);
}
