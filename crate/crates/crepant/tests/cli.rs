//! Black-box tests of the `crepant` binary: exit codes, JSON envelope, and
//! determinism. Exit code 0 = success, 1 = an internal consistency check
//! failed, 2 = bad input or usage.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let exe = env!("CARGO_BIN_EXE_crepant");
    let output = Command::new(exe).args(args).output().expect("launch CLI");
    (
        output.status.code().expect("no exit code"),
        String::from_utf8(output.stdout).expect("stdout not UTF-8"),
        String::from_utf8(output.stderr).expect("stderr not UTF-8"),
    )
}

#[test]
fn every_subcommand_succeeds_on_valid_input() {
    for args in [
        vec!["hj", "19", "7"],
        vec!["kk", "9", "2"],
        vec!["ncdef", "9", "2"],
        vec!["markov", "--max-entry", "100"],
        vec!["markov", "1", "2", "5"],
        vec!["mutate", "r1", "t", "l2", "d"],
        vec!["mutate", "--random", "8", "--seed", "5"],
        vec!["wpp", "1", "4", "25"],
        vec!["smooth", "3", "1", "2"],
        vec!["verify", "--suite", "cfrac", "--max-r", "10"],
    ] {
        let (code, stdout, stderr) = run(&args);
        assert_eq!(code, 0, "{args:?} failed: {stderr}");
        assert!(!stdout.is_empty(), "{args:?} produced no output");
    }
}

#[test]
fn json_envelope_is_well_formed() {
    for args in [
        vec!["hj", "19", "7"],
        vec!["kk", "9", "2"],
        vec!["ncdef", "9", "2"],
        vec!["markov", "1", "2", "5"],
        vec!["mutate", "r1"],
        vec!["wpp", "1", "4", "25"],
        vec!["smooth", "3", "1", "2"],
        vec!["verify", "--suite", "markov"],
    ] {
        let mut with_json = args.clone();
        with_json.push("--json");
        let (code, stdout, _) = run(&with_json);
        assert_eq!(code, 0, "{with_json:?} failed");
        let value: serde_json::Value =
            serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: bad JSON: {e}"));
        assert_eq!(value["schema_version"], 1, "{args:?}");
        assert!(value["command"].is_string(), "{args:?} lacks a command tag");
        // schema_version is the first key of the envelope
        assert!(stdout.trim_start().starts_with("{\n  \"schema_version\""));
    }
}

#[test]
fn invalid_input_exits_2_with_stderr_message() {
    for args in [
        vec!["hj", "9", "6"],                   // not in lowest terms
        vec!["hj", "7", "9"],                   // numerator <= denominator
        vec!["kk", "4", "2"],                   // gcd > 1
        vec!["ncdef", "5", "0"],                // weight out of range
        vec!["markov", "1", "2", "4"],          // not a Markov triple
        vec!["mutate", "x9"],                   // unknown operation
        vec!["wpp", "2", "4", "5"],             // weights not pairwise coprime
        vec!["smooth", "4", "2", "1"],          // gcd(r, a) > 1
        vec!["verify", "--suite", "nonsense"],  // unknown suite
    ] {
        let (code, _, stderr) = run(&args);
        assert_eq!(code, 2, "{args:?} should exit 2, stderr: {stderr}");
        assert!(
            stderr.contains("error"),
            "{args:?} stderr missing error message: {stderr}"
        );
    }
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["hj", "9"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["markov", "1", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn help_is_available() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["hj", "kk", "ncdef", "markov", "mutate", "wpp", "smooth", "verify"] {
        assert!(stdout.contains(sub), "help does not mention {sub}");
    }
}

#[test]
fn verify_text_output_lists_every_check() {
    let (code, stdout, _) = run(&["verify", "--suite", "cfrac", "--max-r", "15"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert!(lines.iter().filter(|l| l.starts_with("PASS")).count() >= 3);
    assert!(lines.iter().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn seeded_commands_are_deterministic() {
    let a = run(&["mutate", "--random", "12", "--seed", "42", "--json"]);
    let b = run(&["mutate", "--random", "12", "--seed", "42", "--json"]);
    assert_eq!(a, b);
    let c = run(&["verify", "--suite", "ktheory", "--seed", "9"]);
    let d = run(&["verify", "--suite", "ktheory", "--seed", "9"]);
    assert_eq!(c, d);
}
