use std::fs;
use std::process::{Command, Output};

fn hailstone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hailstone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn rld_sequence() {
    let out = hailstone(&["seq", "rld", "--L", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "rld\n1\n2\n3\n2\n2\n3\n2\n1\n");
}

#[test]
fn tzs_and_reflect_sequences() {
    let out = hailstone(&["seq", "tzs", "-L", "3"]);
    assert_eq!(stdout(&out), "tzs\n3\n0\n1\n0\n2\n0\n1\n0\n");
    let out = hailstone(&["seq", "reflect", "--L", "2"]);
    assert_eq!(stdout(&out), "reflect\n0\n2\n1\n3\n");
    let out = hailstone(&["seq", "palindromes", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["values"], serde_json::json!([0, 6, 9, 15]));
}

#[test]
fn trajectories() {
    let out = hailstone(&["traj", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("step_index,value,t_value\n0,7,0\n"));

    let out = hailstone(&["traj", "4"]);
    assert_eq!(stdout(&out), "step_index,value,t_value\n0,4,2\n");

    let out = hailstone(&["traj", "1", "--formulation", "branched"]);
    let values: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_owned())
        .collect();
    assert_eq!(values, ["1", "4", "2", "1"]);
}

#[test]
fn trajectory_exit_codes() {
    assert_eq!(
        hailstone(&["traj", "27", "--max-steps", "5"]).status.code(),
        Some(3)
    );
    let big = ((1u128 << 127) + 1).to_string();
    assert_eq!(hailstone(&["traj", &big]).status.code(), Some(4));
    assert_eq!(hailstone(&["traj", "0"]).status.code(), Some(2));
}

#[test]
fn usage_and_resource_errors() {
    assert_eq!(
        hailstone(&["seq", "nope", "--L", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(hailstone(&["seq", "tzs"]).status.code(), Some(2));
    let out = hailstone(&["seq", "tzs", "--L", "30"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--unsafe-large"));
}

#[test]
fn verify_suites() {
    let out = hailstone(&["verify", "prop2", "--k", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
    assert_eq!(hailstone(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn figures_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = hailstone(&[
            "figures",
            "2",
            "--L",
            "10",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    for name in ["fig2_L10.csv", "fig2_L10.json"] {
        let x = fs::read(a.path().join(name)).unwrap();
        let y = fs::read(b.path().join(name)).unwrap();
        assert_eq!(x, y);
    }
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/fig2_L10.csv");
    assert_eq!(
        fs::read(a.path().join("fig2_L10.csv")).unwrap(),
        fs::read(golden).unwrap()
    );
}

#[test]
fn failed_run_leaves_no_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = hailstone(&[
        "figures",
        "1",
        "--L",
        "25",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);

    let target = dir.path().join("tzs.csv");
    let out = hailstone(&["seq", "tzs", "--L", "0", "--out", target.to_str().unwrap()]);
    assert_ne!(out.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn figure5_fixed_frame_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = hailstone(&[
        "figures",
        "5",
        "--Lmin",
        "4",
        "--Lmax",
        "8",
        "--frame",
        "fixed",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = fs::read_to_string(dir.path().join("fig5_L4-8_fixed.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["figure_id"], "5");
    assert_eq!(v["metadata"]["frame_mode"], "fixed");
}
