use std::path::PathBuf;
use std::process::Command;

use idealkit::Error;
use idealkit_cli::commands::run_command;
use idealkit_cli::input::SessionInput;
use idealkit_cli::CliError;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_idealkit"))
}

fn session_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("idealkit-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(src: &str, cmd: &str, args: &[&str]) -> Vec<String> {
    let s = SessionInput::parse(src).unwrap();
    let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
    run_command(&s, cmd, &args).unwrap().lines
}

fn parse_error_at(src: &str) -> (usize, usize) {
    match SessionInput::parse(src) {
        Err(CliError::Core(Error::Parse { line, column, .. })) => (line, column),
        other => panic!("expected a parse error, got {:?}", other.map(|_| ())),
    }
}

#[test]
fn golden_groebner_basis() {
    assert_eq!(run("ring Q[x,y];\nideal I = x^2 + y, y;", "gb", &["I"]), ["y", "x^2"]);
}

#[test]
fn golden_colength_of_monomial_ideal() {
    let src = "ring Q[x,y,z,t];\nideal J = x, y*z, z^3, z^2*t, z*t^2, t^3, y^4, y^3*t, y^2*t^2;";
    assert_eq!(run(src, "colength", &["J"]), ["12"]);
}

#[test]
fn golden_kernel() {
    assert_eq!(run("ring Q[t];", "kernel", &["t^2", "t^3"]), ["x^3 - y^2"]);
}

#[test]
fn lex_order_override_changes_basis() {
    let src = "ring Q[x,y];\nideal I = x - y^2, x*y - 1;";
    let drl = run(src, "gb", &["I"]);
    let s = SessionInput::parse_with(
        src,
        &idealkit_cli::input::Overrides {
            field: None,
            order: Some(idealkit::MonomialOrder::Lex),
        },
    )
    .unwrap();
    let lex = run_command(&s, "gb", &["I".to_string()]).unwrap().lines;
    assert_eq!(lex, ["y^3 - 1", "x - y^2"]);
    assert_ne!(drl, lex);
}

#[test]
fn parse_errors_carry_positions() {
    assert_eq!(parse_error_at("ring Q[x,y];\nideal I = x, 2y;"), (2, 15));
    assert_eq!(parse_error_at("ring Q[x,y];\npoly f = x + w;"), (2, 14));
    let (line, _) = parse_error_at("ring Q[x];\nmatrix M 2x2 = [x, 1; x];");
    assert_eq!(line, 2);
}

#[test]
fn missing_ring_is_an_error() {
    assert!(SessionInput::parse("ideal I = x;").is_err());
}

#[test]
fn exit_code_zero_when_verified() {
    let out = bin().args(["verify", "--lemma", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_verified"], true);
}

#[test]
fn exit_code_one_when_a_claim_fails() {
    let path = session_file("regseq.txt", "ring Q[x,y];\npoly f = x;");
    let out = bin()
        .args(["run", path.to_str().unwrap(), "regseq", "f", "f"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("refuted"));
}

#[test]
fn exit_code_two_on_errors() {
    let out = bin().args(["verify", "--lemma", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["run", "/nonexistent/session.txt", "gb", "I"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let path = session_file("bad.txt", "ring Q[x];\nideal I = x +;");
    let out = bin().args(["run", path.to_str().unwrap(), "gb", "I"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn run_prints_text_lines() {
    let path = session_file("gb.txt", "ring Q[x,y];\nideal I = x^2 + y, y;");
    let out = bin().args(["run", path.to_str().unwrap(), "gb", "I"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "y\nx^2\n");
}

#[test]
fn verify_over_f2_and_text_format() {
    let out = bin()
        .args(["verify", "--lemma", "3", "--field", "fp:2", "--format", "text"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("lemma3 over Fp(2)"));
    assert!(text.contains("claims verified"));
}
