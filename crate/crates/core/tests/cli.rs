//! End-to-end tests of the command-line interface: exit codes, JSON
//! determinism, seed resolution, stdin input, and printer round trips.

use std::io::Write;
use std::process::{Command, Stdio};

fn presentations(file: &str) -> String {
    format!(
        "{}/../../presentations/{}",
        env!("CARGO_MANIFEST_DIR"),
        file
    )
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    run_with(args, &[], None)
}

fn run_with(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_deformata"));
    cmd.args(args).env_remove("DEFORMATA_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    let out = child.wait_with_output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).to_string(),
        stderr: String::from_utf8_lossy(&out.stderr).to_string(),
    }
}

#[test]
fn bracket_reports_qchart_values() {
    let r = run(&["bracket", "--alg", &presentations("qchart.alg")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("[depth] 1"));
    assert!(r.stdout.contains("{x, y} = x*y"));
    assert!(r.stdout.contains("{x, z} = x*z"));
    assert!(r.stdout.contains("{y, z} = -y*z"));
}

#[test]
fn central_element_passes_and_noncentral_fails_with_witness() {
    let r = run(&[
        "central",
        "--poisson",
        &presentations("qchart.poi"),
        "--elem",
        "x*y/z",
    ]);
    assert_eq!(r.code, 0);
    let r = run(&[
        "central",
        "--poisson",
        &presentations("qchart.poi"),
        "--elem",
        "z",
    ]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("[not-central]"));
}

#[test]
fn missing_file_and_parse_errors_exit_2() {
    let r = run(&["bracket", "--alg", "/nonexistent/file.alg"]);
    assert_eq!(r.code, 2);
    let dir = std::env::temp_dir().join("deformata-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "algebra a { vars = [x @ }").unwrap();
    let r = run(&["bracket", "--alg", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 1"));
}

#[test]
fn unknown_flag_exits_2() {
    let r = run(&["bracket", "--no-such-flag"]);
    assert_eq!(r.code, 2);
}

#[test]
fn mutated_action_fails_with_relation_witness() {
    let dir = std::env::temp_dir().join("deformata-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(presentations("qchart.act")).unwrap();
    let mutated = text.replace("act.a.z = x*y", "act.a.z = x^2");
    let path = dir.join("mutated.act");
    std::fs::write(&path, mutated).unwrap();
    let r = run(&[
        "check-action",
        "--alg",
        &presentations("qchart.alg"),
        "--action",
        path.to_str().unwrap(),
        "--max-deg",
        "3",
    ]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("relation"));
}

#[test]
fn json_reports_are_byte_identical_for_same_seed() {
    let args = [
        "check-action",
        "--alg",
        &presentations("qchart.alg"),
        "--action",
        &presentations("qchart.act"),
        "--json",
        "--seed",
        "5",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("\"schema\": 1"));
    assert!(a.stdout.contains("\"seed\": 5"));
    assert!(a.stdout.contains("\"inputs_digest\""));
    // a different seed changes the digest
    let c = run(&[
        "check-action",
        "--alg",
        &presentations("qchart.alg"),
        "--action",
        &presentations("qchart.act"),
        "--json",
        "--seed",
        "6",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_env_var_honored_and_flag_wins() {
    let by_env = run_with(
        &["verify-paper", "--json"],
        &[("DEFORMATA_SEED", "9")],
        None,
    );
    assert!(by_env.stdout.contains("\"seed\": 9"));
    let flag_wins = run_with(
        &["verify-paper", "--json", "--seed", "3"],
        &[("DEFORMATA_SEED", "9")],
        None,
    );
    assert!(flag_wins.stdout.contains("\"seed\": 3"));
    let default = run(&["verify-paper", "--json"]);
    assert!(default.stdout.contains("\"seed\": 1"));
}

#[test]
fn stdin_accepted_with_dash() {
    let text = std::fs::read_to_string(presentations("qchart.poi")).unwrap();
    let r = run_with(
        &["center", "--poisson", "-", "--max-deg", "3"],
        &[],
        Some(&text),
    );
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("trivial up to degree 3"));
}

#[test]
fn jacobi_violation_exits_1_with_defect_witness() {
    let bad = "poisson p { vars = [x, y, z] bracket.x.y = y bracket.y.z = x }";
    let r = run_with(&["jacobi", "--poisson", "-"], &[], Some(bad));
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("[jacobi-defect]"));
}

#[test]
fn verify_paper_passes() {
    let r = run(&["verify-paper"]);
    assert_eq!(r.code, 0, "stdout: {}", r.stdout);
    assert!(r.stdout.contains("status: pass"));
    assert!(r.stdout.contains("[rees]"));
}

#[test]
fn golden_round_trip_of_shipped_files() {
    use deformata::frontend::{build_env, parse_document, print_env};
    let mut docs = Vec::new();
    for f in [
        "qchart.alg",
        "qchart.poi",
        "qchart.act",
        "moyal.alg",
        "weyl.flt",
        "comm3.alg",
        "z2.act",
        "z3.act",
        "sl2.alg",
    ] {
        let text = std::fs::read_to_string(presentations(f)).unwrap();
        docs.push(parse_document(&text).unwrap());
    }
    let env = build_env(&docs, None).unwrap();
    let printed = print_env(&env);
    let reparsed = build_env(&[parse_document(&printed).unwrap()], None).unwrap();
    assert_eq!(print_env(&reparsed), printed);
    assert_eq!(env.algebras, reparsed.algebras);
    assert_eq!(env.filtered, reparsed.filtered);
}

#[test]
fn rees_command_round_trips_weyl() {
    let r = run(&["rees", "--alg", &presentations("weyl.flt")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("y * x -> x*y + h*(1)"));
    assert!(r.stdout.contains("restores the input"));
}

#[test]
fn factors_answers_group_for_group_actions() {
    let r = run(&[
        "factors",
        "--alg",
        &presentations("comm3.alg"),
        "--action",
        &presentations("z3.act"),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("factors through a group algebra of order 3"));
}
