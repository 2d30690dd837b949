use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jc-entropy"))
        .args(args)
        .output()
        .expect("spawn jc-entropy")
}

fn csv(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn default_run_writes_full_series() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&["--output", path.to_str().unwrap()]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let text = csv(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,S_F,S_A,xi_F,inversion,lambda_1,lambda_2,lambda_3,lambda_4"
    );
    assert_eq!(lines.count(), 1001);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn oracle_columns_and_stdout() {
    let out = run(&[
        "--scenario",
        "atom-mixture",
        "--alpha",
        "2,0.5",
        "--c",
        "0.3",
        "--tmax",
        "3",
        "--steps",
        "6",
        "--dim",
        "40",
        "--oracle",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].ends_with("S_AB,al_lower_margin,al_upper_margin,oracle_S_F_delta"));
    for row in &lines[1..] {
        let values: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(values.len(), 13);
        assert!(values[10] >= -1e-8 && values[11] >= -1e-8, "{row}");
        assert!(values[12] < 1e-8, "{row}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["--c", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--c"));

    let out = run(&["--steps", "many"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--steps"));
}

#[test]
fn config_file_errors_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.conf");
    std::fs::write(&path, "# comment\nscenario = field-mixture\ntmax = -1\n").unwrap();
    let out = run(&["--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn config_file_drives_run() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("atom.conf");
    let output = dir.path().join("atom.csv");
    std::fs::write(
        &conf,
        format!(
            "scenario = atom-mixture\nalpha = 4,0\nc = 0.5\ntmax = 5\nsteps = 10\noutput = {}\n",
            output.display()
        ),
    )
    .unwrap();
    let out = run(&["--config", conf.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = csv(&output);
    let first: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    // Pure coherent field, maximally mixed atom at t = 0.
    assert!(first[1].abs() < 1e-10);
    assert!((first[2] - std::f64::consts::LN_2).abs() < 1e-10);
}

#[test]
fn truncation_failure_exits_3() {
    let out = run(&["--dim", "20", "--steps", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("raise the Fock dimension"));
}
