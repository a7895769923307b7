use std::process::{Command, Output};

fn apollon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apollon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_csv_rows() {
    let o = apollon(&["enumerate", "--max-bend", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0], "0,0,0,1,0,0,1,1,1,0,strip");
    assert_eq!(*rows.last().unwrap(), "6,2,5,8,-6,11,14,15,23,4/5,skew");
}

#[test]
fn enumerate_rejects_negative_bound() {
    assert_eq!(
        apollon(&["enumerate", "--max-bend", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        apollon(&["enumerate", "--max-bend", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn enumerate_is_deterministic_across_thread_counts() {
    let one = Command::new(env!("CARGO_BIN_EXE_apollon"))
        .args(["enumerate", "--max-bend", "40", "--format", "json"])
        .env("APOLLON_THREADS", "1")
        .output()
        .unwrap();
    let many = apollon(&["enumerate", "--max-bend", "40", "--format", "json"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn generate_exit_codes() {
    let o = apollon(&["generate", "--key", "1,0,1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("≠"));
    assert_eq!(
        apollon(&["generate", "--key", "0,0,0,1", "--max-bend", "5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        apollon(&["generate", "--key", "1,0,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn generate_principal_quintet() {
    let o = apollon(&[
        "generate",
        "--key",
        "6,2,5,8",
        "--max-bend",
        "23",
        "--format",
        "csv",
    ]);
    let out = stdout(&o);
    let bends: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(bends, ["-6", "11", "14", "15", "23"]);
}

#[test]
fn frames_predicate() {
    let o = apollon(&["frames", "--key", "6,2,5,8", "--depth", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("key 6,2,5,8: k | 2B^2 is false"));
    assert_eq!(
        apollon(&["frames", "--key", "6,2,5,9"]).status.code(),
        Some(2)
    );
}

#[test]
fn render_window() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("window.svg");
    let o = apollon(&[
        "render",
        "--key",
        "1,0,1,1",
        "--max-bend",
        "100",
        "--out",
        path.to_str().unwrap(),
        "--labels",
        "bends",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let count: usize = stdout(&o).trim().parse().unwrap();
    assert!(count > 50);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
}

#[test]
fn render_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.svg");
    let o = apollon(&[
        "render",
        "--key",
        "1,0,1,1",
        "--max-bend",
        "10",
        "--out",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(4));

    let ok = dir.path().join("x.svg");
    let o = apollon(&[
        "render",
        "--key",
        "6,2,5,8",
        "--max-bend",
        "20",
        "--out",
        ok.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
    assert!(!ok.exists());

    let o = apollon(&[
        "render",
        "--key",
        "1,0,1,1",
        "--max-bend",
        "10",
        "--out",
        ok.to_str().unwrap(),
        "--width",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
