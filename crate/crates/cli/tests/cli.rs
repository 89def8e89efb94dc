//! Drives the compiled binary end to end: output bytes, exit codes, ledger
//! round trips and determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn webbcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_webbcert"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn shipped_ledger() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/paper.ledger")
        .display()
        .to_string()
}

#[test]
fn webb_four_live_certificate_is_golden() {
    let out = webbcert(&["webb", "4", "--degree", "2", "--compute-missing"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let expected = "\
P(1+1+1+1)  order=64=2^6  dim=7  source=computed
P(1+2+1)  order=192=2^6*3  dim=4  source=computed
P(2+2)  order=576=2^6*3^2  dim=4  source=computed
total=15 parity=odd verdict=nonzero-certified
";
    assert_eq!(stdout_str(&out), expected);
}

#[test]
fn webb_six_certificate_from_the_shipped_ledger_is_golden() {
    let ledger = shipped_ledger();
    let out = webbcert(&["webb", "6", "--degree", "3", "--ledger", &ledger]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let expected = "\
P(1+1+1+1+1+1)  order=32768=2^15  dim=47  source=paper
P(1+1+2+1+1)  order=98304=2^15*3  dim=28  source=paper
P(1+2+2+1)  order=294912=2^15*3^2  dim=16  source=paper
P(1+4+1)  order=10321920=2^15*3^2*5*7  dim=5  source=paper
P(2+1+1+2)  order=294912=2^15*3^2  dim=24  source=paper
P(2+2+2)  order=884736=2^15*3^3  dim=17  source=paper
P(3+3)  order=14450688=2^15*3^2*7^2  dim=6  source=paper
total=143 parity=odd verdict=nonzero-certified
";
    assert_eq!(stdout_str(&out), expected);

    let tsv = webbcert(&["webb", "6", "--degree", "3", "--ledger", &ledger, "--tsv"]);
    assert_eq!(code(&tsv), 0);
    let expected_tsv = "\
composition\torder\tdim\tsource
P(1+1+1+1+1+1)\t32768\t47\tpaper
P(1+1+2+1+1)\t98304\t28\tpaper
P(1+2+2+1)\t294912\t16\tpaper
P(1+4+1)\t10321920\t5\tpaper
P(2+1+1+2)\t294912\t24\tpaper
P(2+2+2)\t884736\t17\tpaper
P(3+3)\t14450688\t6\tpaper
TOTAL\t143\todd\tnonzero-certified
";
    assert_eq!(stdout_str(&tsv), expected_tsv);
}

#[test]
fn webb_without_data_exits_three_and_lists_every_gap() {
    let out = webbcert(&["webb", "6", "--degree", "3"]);
    assert_eq!(code(&out), 3);
    let err = stderr_str(&out);
    for label in [
        "GL(q=2,r=6):P(1+1+1+1+1+1)",
        "GL(q=2,r=6):P(1+4+1)",
        "GL(q=2,r=6):P(3+3)",
    ] {
        assert!(err.contains(label), "missing {label} in {err}");
    }
    assert!(err.contains("--compute-missing"));
    assert!(out.stdout.is_empty());
}

#[test]
fn rank_one_is_inconclusive_with_exit_two() {
    let out = webbcert(&["webb", "1", "--degree", "5"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_str(&out), "total=0 parity=even verdict=inconclusive\n");
}

#[test]
fn usage_errors_exit_five() {
    for args in [
        &["frobnicate"][..],
        &["webb"][..],
        &["webb", "0", "--degree", "1"][..],
        &["cohomology", "nonsense:1", "--degree", "1"][..],
        &["cohomology", "parabolic:3:3:1,1,1", "--degree", "1"][..],
        &["cohomology", "klein4", "--degree", "1", "--oracle", "--force-generic"][..],
    ] {
        let out = webbcert(args);
        assert_eq!(code(&out), 5, "args {args:?}: {}", stderr_str(&out));
    }
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"][..], &["webb", "--help"][..]] {
        let out = webbcert(args);
        assert_eq!(code(&out), 0, "args {args:?}");
    }
}

#[test]
fn resource_ceilings_exit_four() {
    let capped = webbcert(&["cohomology", "parabolic:2:4:2,2", "--degree", "2", "--cap", "100"]);
    assert_eq!(code(&capped), 4, "stderr: {}", stderr_str(&capped));
    let bits = webbcert(&["cohomology", "elemabelian:8", "--degree", "2", "--max-bits", "64"]);
    assert_eq!(code(&bits), 4, "stderr: {}", stderr_str(&bits));
    let oracle = webbcert(&["cohomology", "cyclic:17", "--degree", "2", "--oracle"]);
    assert_eq!(code(&oracle), 4, "stderr: {}", stderr_str(&oracle));
}

#[test]
fn stdout_is_byte_deterministic_across_runs() {
    let first = webbcert(&["webb", "4", "--degree", "2", "--compute-missing"]);
    let second = webbcert(&["webb", "4", "--degree", "2", "--compute-missing"]);
    assert_eq!(code(&first), 0);
    assert_eq!(code(&second), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn oracle_flag_uses_the_bar_complex() {
    let out = webbcert(&["cohomology", "klein4", "--degree", "3", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out), "elemabelian:4  degree=3  dim=4  method=bar-oracle\n");
}

#[test]
fn cohomology_results_can_be_recorded_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.ledger");
    let path_str = path.display().to_string();

    let first = webbcert(&["cohomology", "cyclic:8", "--degree", "2", "--ledger", &path_str]);
    assert_eq!(code(&first), 0, "stderr: {}", stderr_str(&first));
    assert_eq!(stdout_str(&first), "cyclic:8  degree=2  dim=1  method=minimal-resolution\n");
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text, "cyclic:8,2,1,computed,minimal-resolution\n");

    // recording the same dimension again is a quiet no-op
    let again = webbcert(&["cohomology", "cyclic:8", "--degree", "2", "--ledger", &path_str]);
    assert_eq!(code(&again), 0);
    assert!(stderr_str(&again).contains("already recorded"));
    assert_eq!(fs::read_to_string(&path).unwrap(), text);

    // a disagreeing recorded value is a hard error
    fs::write(&path, "cyclic:8,2,99,paper,wrong on purpose\n").unwrap();
    let clash = webbcert(&["cohomology", "cyclic:8", "--degree", "2", "--ledger", &path_str]);
    assert_eq!(code(&clash), 1);
    assert!(stderr_str(&clash).contains("refusing"));
}

#[test]
fn webb_mixes_ledger_rows_with_computed_ones() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("partial.ledger");
    fs::write(&path, "GL(q=2,r=4):P(1+2+1),2,4,paper,published computation\n").unwrap();
    let path_str = path.display().to_string();
    let out = webbcert(&[
        "webb", "4", "--degree", "2", "--ledger", &path_str, "--compute-missing",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(text.contains("P(1+2+1)  order=192=2^6*3  dim=4  source=paper"));
    assert!(text.contains("P(1+1+1+1)  order=64=2^6  dim=7  source=computed"));
    assert!(text.ends_with("total=15 parity=odd verdict=nonzero-certified\n"));
    // only the two gaps were computed
    let err = stderr_str(&out);
    assert!(!err.contains("computing GL(q=2,r=4):P(1+2+1)"));
    assert!(err.contains("computing GL(q=2,r=4):P(2+2)"));
}

#[test]
fn composition_listings_are_in_fixed_order() {
    let out = webbcert(&["compositions", "6", "--symmetric"]);
    assert_eq!(code(&out), 0);
    let expected = "1+1+1+1+1+1\n1+1+2+1+1\n1+2+2+1\n1+4+1\n2+1+1+2\n2+2+2\n3+3\n6\n";
    assert_eq!(stdout_str(&out), expected);

    let proper = webbcert(&["compositions", "4", "--symmetric", "--proper"]);
    assert_eq!(stdout_str(&proper), "1+1+1+1\n1+2+1\n2+2\n");

    let all = webbcert(&["compositions", "4"]);
    assert_eq!(stdout_str(&all).lines().count(), 8);
}

#[test]
fn parabolic_info_reports_orders_and_generator_counts() {
    let single = webbcert(&["parabolic-info", "4", "--parts", "1,2,1"]);
    assert_eq!(code(&single), 0);
    assert_eq!(
        stdout_str(&single),
        "GL(q=2,r=4):P(1+2+1)  order=192=2^6*3  generators=7  symmetric=yes  proper=yes\n"
    );
    let tsv = webbcert(&["parabolic-info", "6", "--tsv"]);
    assert_eq!(code(&tsv), 0);
    let text = stdout_str(&tsv);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("label\torder\tgenerators\tsymmetric\tproper"));
    assert_eq!(text.lines().count(), 33, "header plus thirty-two compositions");
    assert!(text.contains("GL(q=2,r=6):P(6)\t20158709760\t"));
}

#[test]
fn cohomology_tsv_has_a_header_and_one_row() {
    let out = webbcert(&["cohomology", "dihedral:8", "--degree", "3", "--tsv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_str(&out),
        "label\tdegree\tdim\tmethod\ndihedral:8\t3\t4\tminimal-resolution\n"
    );
}

#[test]
fn degree_zero_is_one_dimensional_from_the_command_line() {
    let out = webbcert(&["cohomology", "cyclic:2", "--degree", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out), "cyclic:2  degree=0  dim=1  method=minimal-resolution\n");
}
