use std::fs;
use std::process::{Command, Output};

fn fockcan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockcan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn canon_examples() {
    let o = fockcan(&["canon", "--b", "01", "--f", "2,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "M[2,2] + q*M[1,1]\n");
    let o = fockcan(&["canon", "--b", "00", "--f", "1,0", "--k", "1"]);
    assert_eq!(stdout(&o), "M[1,0] + q*M[0,1]\n");
    let o = fockcan(&[
        "canon",
        "--b",
        "10",
        "--f",
        "-1,-1",
        "--method",
        "transport",
    ]);
    assert_eq!(stdout(&o), "M[-1,-1] + q*M[0,0]\n");
}

#[test]
fn table_csv() {
    let o = fockcan(&[
        "table",
        "--b",
        "01",
        "--k",
        "1",
        "--kind",
        "canonical",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "g,f,polynomial");
    // 9 diagonal entries plus the two q-entries of the class (-1,-1), (0,0), (1,1).
    assert_eq!(rows.len(), 1 + 9 + 2);
    assert!(rows.contains(&"\"-1,-1\",\"0,0\",q"));
    assert!(rows.contains(&"\"0,0\",\"1,1\",q"));
}

#[test]
fn verify_passes_and_exits_zero() {
    for (suite, b, k) in [("duality", "00", "2"), ("involution", "010", "2")] {
        let o = fockcan(&["verify", "--suite", suite, "--b", b, "--k", k]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains(", 0 failed"));
    }
}

#[test]
fn transport_example_chain() {
    let o = fockcan(&["transport", "--b", "101010", "--f", "0,0,4,2,1,3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "g = (0,4,1,0,2,3)");
    assert_eq!(lines.len(), 6);
    assert!(lines[3].starts_with("R_3: T^110100_(0,4,0,1,2,3) = "));
    assert!(lines[5].starts_with("R_2: T^101010_(0,0,4,2,1,3) = M[0,0,4,2,1,3] + "));
}

#[test]
fn exit_codes() {
    assert_eq!(
        fockcan(&["canon", "--b", "01", "--f", "1,x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fockcan(&["canon", "--b", "01", "--f", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fockcan(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(fockcan(&["canon", "--b", "01"]).status.code(), Some(2));
    let o = fockcan(&["canon", "--b", "01", "--f", "4,4", "--max-k", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-k"));
}

#[test]
fn deterministic_output() {
    let args = [
        "table", "--b", "010", "--k", "1", "--kind", "dual", "--format", "json",
    ];
    assert_eq!(fockcan(&args).stdout, fockcan(&args).stdout);
}

#[test]
fn cache_roundtrip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["canon", "--b", "110", "--f", "1,0,1", "--cache-dir", d];
    let fresh = fockcan(&args);
    assert!(fresh.status.success());
    let files: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);

    let hit = fockcan(&[&args[..], &["--check-cache"]].concat());
    assert!(hit.status.success());
    assert_eq!(hit.stdout, fresh.stdout);

    fs::write(&files[0], "{ not json").unwrap();
    let again = fockcan(&args);
    assert!(again.status.success());
    assert_eq!(again.stdout, fresh.stdout);
    assert!(fs::read_to_string(&files[0])
        .unwrap()
        .contains("\"manifest\""));

    // A well-formed entry with a tampered payload is caught in check mode.
    let text = fs::read_to_string(&files[0])
        .unwrap()
        .replace("\"c\":\"q\"", "\"c\":\"q^5\"");
    fs::write(&files[0], text).unwrap();
    let checked = fockcan(&[&args[..], &["--check-cache"]].concat());
    assert!(!checked.status.success());
}
