//! End-to-end checks of the command-line contract: exit codes,
//! byte-identical reruns, and the thread-cap environment variable.

use std::path::PathBuf;
use std::process::{Command, Output};

const SWAVE: &str = "\
[physics]
q = 1.0
alpha = 0.5
r_e = 0.1671
M = 5.0
V0 = 6.0
V1 = -1.0
D = 3
n = 0

[angular]
ell_override = 0
";

/// A configuration whose scan window contains no admissible root.
const UNBOUND: &str = "\
[physics]
q = 1.0
alpha = 0.5
r_e = 0.1671
M = 5.0
V0 = 6.0
V1 = -1.0
D = 5
n = 1

[angular]
a1 = 2
b1 = 2
n1 = 1
a2 = 2
b2 = 2
n2 = 1
a3 = 2
b3 = 2
n3 = 1
a4 = 2
b4 = 2
n4 = 1
";

fn write_config(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("dirac-aim-test-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac-aim"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn solve_succeeds_with_csv_contract() {
    let cfg = write_config("solve.conf", SWAVE);
    let out = run(&["solve", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("row,q,r_e,n,n_l,E_computed,E_paper,residual,admissible\n"));
    assert!(text.contains("# provenance: config-hash="));
}

#[test]
fn reruns_are_byte_identical() {
    let cfg = write_config("determinism.conf", SWAVE);
    let a = run(&["solve", cfg.to_str().unwrap()]);
    let b = run(&["solve", cfg.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);

    // A thread cap must not change the result, only the schedule.
    let c = Command::new(env!("CARGO_BIN_EXE_dirac-aim"))
        .args(["solve", cfg.to_str().unwrap()])
        .env("DIRAC_AIM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn parse_and_validation_failures_exit_1() {
    // Missing file.
    assert_eq!(run(&["solve", "/nonexistent/x.conf"]).status.code(), Some(1));

    // Unknown key.
    let bad = write_config("badkey.conf", &format!("{SWAVE}\nfrequency = 3\n"));
    assert_eq!(run(&["solve", bad.to_str().unwrap()]).status.code(), Some(1));

    // Unsupported table id.
    assert_eq!(run(&["table", "42"]).status.code(), Some(1));

    // Empty wavefunction grid.
    let cfg = write_config("grid.conf", SWAVE);
    let out = run(&["wavefunction", cfg.to_str().unwrap(), "--grid", "0.1,5,0"]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown sweep parameter.
    let out = run(&["sweep", cfg.to_str().unwrap(), "--param", "banana", "--values", "1"]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown subcommand (clap usage error).
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn solver_failures_exit_2() {
    // No bound state in the scan window: wavefunction has nothing to
    // tabulate.
    let cfg = write_config("unbound.conf", UNBOUND);
    let out = run(&["wavefunction", cfg.to_str().unwrap(), "--grid", "0.1,5,10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn angular_tabulation_works_in_chain_mode() {
    let chain = "\
[physics]
q = 1.0
alpha = 0.5
r_e = 3.0
M = 5.0
V0 = 6.0
V1 = -1.0
D = 3
n = 0

[angular]
a1 = 2
b1 = 2
n1 = 0
a2 = 2
b2 = 2
n2 = 0
";
    let cfg = write_config("chain.conf", chain);
    let out = run(&["angular", cfg.to_str().unwrap(), "--axis", "1", "--points", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("theta,P\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with(['t', '#'])).count(), 7);

    // Axis out of range is a validation error.
    let out = run(&["angular", cfg.to_str().unwrap(), "--axis", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
