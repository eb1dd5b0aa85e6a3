use std::path::PathBuf;
use std::process::Command;

use evfe_cli::{exit, run};

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn evfe(args: &[&str]) -> evfe_cli::Outcome {
    run(std::iter::once("evfe").chain(args.iter().copied()))
}

fn stdout(o: &evfe_cli::Outcome) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &evfe_cli::Outcome) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_diagonal_is_exact() {
    let o = evfe(&["verify", "--gen", "diagonal", "--n", "3", "--seed", "0", "--tol", "1e-12"]);
    assert_eq!(o.code, exit::SUCCESS, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["max_abs_error"], 0.0);
    assert_eq!(v["pass"], true);
}

#[test]
fn swap_matrix_has_half_weights() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "swap.txt", "hermitian dense 2\n0 1\n1 0\n");
    let o = evfe(&["magnitudes", f.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let (eigs, rows) = evfe::io::read_table_csv(&stdout(&o)).unwrap();
    assert_eq!(eigs.len(), 2);
    assert!((eigs[0] + 1.0).abs() < 1e-14 && (eigs[1] - 1.0).abs() < 1e-14);
    for r in rows {
        for x in r {
            assert!((x - 0.5).abs() < 1e-14);
        }
    }
}

#[test]
fn resolvent_on_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "d.txt", "hermitian dense 2\n1 0\n0 2\n");
    let o = evfe(&["resolvent", f.to_str().unwrap(), "--col", "1", "--from", "0", "--to", "3", "--samples", "3"]);
    assert_eq!(o.code, 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,det_form,pf_form,nearest_pole_gap"));
    let expect = [(0.0, 1.0), (1.5, -2.0), (3.0, -0.5)];
    for ((lambda, f), line) in expect.iter().zip(lines) {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cells[0], *lambda);
        assert!((cells[1] - f).abs() < 1e-14, "{line}");
        assert!((cells[2] - f).abs() < 1e-14, "{line}");
    }
}

#[test]
fn resolvent_single_form_leaves_other_empty() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "d.txt", "hermitian dense 2\n1 0\n0 2\n");
    let o = evfe(&["resolvent", f.to_str().unwrap(), "--col", "2", "--from", "-1", "--to", "0", "--samples", "2", "--form", "pf"]);
    assert_eq!(o.code, 0);
    for line in stdout(&o).lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 4);
        assert!(cells[1].is_empty() && !cells[2].is_empty());
    }
}

#[test]
fn single_column_matches_table() {
    let dir = tempfile::tempdir().unwrap();
    let g = evfe(&["gen", "--kind", "gue", "--n", "6", "--seed", "4"]);
    let f = write(&dir, "g.txt", &stdout(&g));
    let full = evfe::io::read_table_csv(&stdout(&evfe(&["magnitudes", f.to_str().unwrap()]))).unwrap();
    let col = evfe(&["magnitudes", f.to_str().unwrap(), "--col", "4"]);
    let text = stdout(&col);
    assert!(text.starts_with("lambda,coord_4\n"));
    let (_, rows) = evfe::io::read_table_csv(&text).unwrap();
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r[0], full.1[i][3]);
    }
}

#[test]
fn gen_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.txt");
    let o = evfe(&["gen", "--kind", "clustered", "--n", "6", "--seed", "2", "--mult", "3,3", "--layout", "coordinate", "-o", out.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let v = evfe(&["verify", out.to_str().unwrap()]);
    assert_eq!(v.code, 0, "{}", stdout(&v));
    let rep: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(rep["degenerate_clusters"], 2);
}

#[test]
fn interlace_reports_pass() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "g.txt", &stdout(&evfe(&["gen", "--kind", "goe", "--n", "5", "--seed", "1"])));
    let o = evfe(&["interlace", f.to_str().unwrap(), "--col", "3"]);
    assert_eq!(o.code, 0);
    let rep: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep["pass"], true);
    assert_eq!(rep["coordinate"], 3);
}

#[test]
fn error_paths() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(&dir, "one.txt", "hermitian dense 1\n5\n");
    let bad = write(&dir, "bad.txt", "hermitian dense 2\n1 2\n3 4\n");
    let garbled = write(&dir, "garbled.txt", "hermitian dense 2\n1 x\n0 1\n");
    let pole = write(&dir, "pole.txt", "hermitian dense 2\n2 0\n0 2\n");
    let swap = write(&dir, "swap.txt", "hermitian dense 2\n0 1\n1 0\n");

    let cases: Vec<(Vec<&str>, i32, &str)> = vec![
        (vec!["magnitudes", one.to_str().unwrap()], 2, "error:dimension-too-small:"),
        (vec!["magnitudes", bad.to_str().unwrap()], 2, "error:not-hermitian:"),
        (vec!["magnitudes", garbled.to_str().unwrap()], 2, "error:parse:"),
        (vec!["magnitudes", "/nonexistent/file"], 2, "error:io:"),
        (vec!["magnitudes", swap.to_str().unwrap(), "--col", "3"], 2, "error:index-out-of-range:"),
        (vec!["resolvent", pole.to_str().unwrap(), "--col", "1", "--from", "2", "--to", "3", "--samples", "2"], 3, "error:pole-evaluation:"),
        (vec!["verify"], 2, "error:usage:"),
        (vec!["frobnicate"], 2, "error:usage:"),
        (vec!["gen", "--kind", "clustered", "--n", "4", "--seed", "0", "--mult", "3,3"], 2, "error:invalid-spec:"),
    ];
    for (args, code, prefix) in cases {
        let o = evfe(&args);
        assert_eq!(o.code, code, "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).starts_with(prefix), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_evfe");
    let ok = Command::new(bin).args(["verify", "--gen", "goe", "--n", "4", "--seed", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let fail = Command::new(bin).args(["verify", "--gen", "goe", "--n", "4", "--seed", "1", "--tol", "0"]).output().unwrap();
    let code = fail.status.code().unwrap();
    assert!(code == 0 || code == 1);
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:usage:"));
}
