use std::process::{Command, Output};

fn dthermo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dthermo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn two_points_give_one_row_per_method() {
    for (methods, count) in [
        ("classical,quantum,nondeformed", 3),
        ("classical", 1),
        ("quantum,nondeformed", 2),
    ] {
        let o = dthermo(&["sweep", "--points", "2", "--methods", methods]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().count(), 1 + 2 * count);
    }
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, jobs) in [(&a, "1"), (&b, "4")] {
        let o = dthermo(&[
            "sweep",
            "--points",
            "12",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let a = std::fs::read(a).unwrap();
    assert_eq!(a, std::fs::read(b).unwrap());
    assert_eq!(
        stdout(&dthermo(&["sweep", "--points", "12"])).as_bytes(),
        a.as_slice()
    );
}

/// The Einstein capacity sits `x²/4` (`x = ħω/T`) below equipartition, so
/// the columns agree to 1e-3 only from `T ≈ 16` up; at `T = 5` the gap is 0.01.
#[test]
fn undeformed_quantum_and_classical_agree_at_high_temperature() {
    let o = dthermo(&[
        "sweep",
        "--beta",
        "0",
        "--beta-prime",
        "0",
        "--methods",
        "classical,quantum",
        "--t-min",
        "5",
        "--t-max",
        "50",
        "--points",
        "10",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 20);
    for pair in rows.chunks(2) {
        assert_eq!(pair[0][0], pair[1][0]);
        assert_eq!((pair[0][4], pair[1][4]), ("classical", "quantum"));
        let c: f64 = pair[0][3].parse().unwrap();
        let q: f64 = pair[1][3].parse().unwrap();
        let t: f64 = pair[0][0].parse().unwrap();
        let x = 1.0 / t;
        assert!((c - q - x * x / 4.0).abs() < 2e-4, "T={t}: {c} vs {q}");
        if t >= 16.0 {
            assert!((c - q).abs() < 1e-3, "T={t}: {c} vs {q}");
        }
    }
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(
        &cfg,
        "system = ideal-gas\nmethods = classical\npoints = 5\nt_min = 1\nt_max = 2\n",
    )
    .unwrap();
    let o = dthermo(&["sweep", "--config", cfg.to_str().unwrap(), "--points", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("1,"));
    assert!(text.lines().last().unwrap().starts_with("2,"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["sweep", "--system", "ideal-gas", "--methods", "quantum"][..],
        &["sweep", "--t-min", "3", "--t-max", "1"],
        &["sweep", "--points", "1"],
        &["sweep", "--config", "/nonexistent/dthermo.conf"],
        &["sweep", "--scale", "cubic"],
        &["jacobian-verify", "--dim", "4"],
        &["limits", "--mass", "-1"],
        &["frobnicate"],
    ] {
        let o = dthermo(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn jacobian_verify_passes() {
    for dim in ["1", "2", "3"] {
        let o = dthermo(&[
            "jacobian-verify",
            "--dim",
            dim,
            "--trials",
            "100",
            "--seed",
            "42",
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("PASS"));
    }
}

#[test]
fn limits_report() {
    let o = dthermo(&["limits"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("high-T E/N plateau"));
    assert!(text.contains("C/N, D=3 n=1 s=0"));
}

#[test]
fn tolerance_failure_exits_with_one() {
    // With β' ≫ β the leading low-temperature law is far off at βmT = 1e-3.
    let o = dthermo(&["limits", "--system", "ideal-gas", "--beta-prime", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("low-T C/N deficit"));
}
