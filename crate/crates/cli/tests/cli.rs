use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use backarc_cli::{Certificate, Kind};
use tempfile::TempDir;

fn backarc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_backarc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = backarc(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn gen_to(dir: &TempDir, name: &str, spec: &str) -> PathBuf {
    let path = dir.path().join(name);
    ok(&["gen", "--spec", spec, "-o", s(&path)]);
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_is_deterministic_and_flag_form_matches_spec_form() {
    let dir = TempDir::new().unwrap();
    let spec = "alpha2:n=9,digon=0.2,conn=two,mode=trianglefree,density=0.5,seed=3";
    let a = fs::read_to_string(gen_to(&dir, "a.dg", spec)).unwrap();
    let b = ok(&["gen", "--spec", spec]);
    assert_eq!(a, b);
    let c = ok(&[
        "gen", "--family", "alpha2", "--n", "9", "--digon", "0.2", "--conn", "two", "--mode", "trianglefree",
        "--density", "0.5", "--seed", "3",
    ]);
    assert_eq!(a, c);
    assert!(a.contains(&format!("# instance: {spec}")));
}

#[test]
fn solve_path_on_two_tournaments_needs_two_backward_arcs() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(&dir, "fig.dg", "fig1:k=4,m=5,seed=0");
    let cert = Certificate::parse(&ok(&["solve-path", s(&g)])).unwrap();
    assert_eq!(cert.kind, Kind::Orpath);
    assert_eq!(cert.n, 9);
    assert_eq!(cert.sigma_minus, 2);
    assert_eq!(cert.instance.as_deref(), Some("fig1:k=4,m=5,seed=0"));
    let exact = ok(&["oracle", s(&g)]);
    assert!(exact.starts_with("minimum 2\n"), "{exact}");
}

#[test]
fn certificates_pass_an_independent_verify_run() {
    let dir = TempDir::new().unwrap();
    for (i, spec) in [
        "alpha2:n=12,digon=0.2,conn=two,mode=bipartite,density=0.5,seed=1",
        "planted:x=6,y=8,digon=0.2,density=0.6,seed=2",
        "semicomplete:n=10,digon=0.3,seed=4",
    ]
    .iter()
    .enumerate()
    {
        let g = gen_to(&dir, &format!("{i}.dg"), spec);
        for cmd in ["solve-path", "solve-cycle"] {
            let cert = dir.path().join(format!("{i}.{cmd}.cert"));
            ok(&[cmd, s(&g), "-o", s(&cert)]);
            let report = ok(&["verify", s(&g), s(&cert)]);
            assert!(report.ends_with("result pass\n"), "{report}");
            assert!(!report.contains("FAIL"));
        }
    }
}

#[test]
fn tampered_certificates_exit_three() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(&dir, "g.dg", "alpha2:n=10,digon=0.2,conn=two,mode=mixed,density=0.5,seed=0");
    let text = ok(&["solve-cycle", s(&g)]);
    let mut cert = Certificate::parse(&text).unwrap();

    cert.sequence.swap(0, 1);
    cert.sequence[2] = cert.sequence[3];
    let bad = dir.path().join("dup.cert");
    fs::write(&bad, cert.to_text()).unwrap();
    let out = backarc(&["verify", s(&g), s(&bad)]);
    assert_eq!(out.status.code(), Some(3));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL distinct") && stdout.ends_with("result fail\n"), "{stdout}");

    let mut cert = Certificate::parse(&text).unwrap();
    cert.sigma_minus += 1;
    fs::write(&bad, cert.to_text()).unwrap();
    assert_eq!(backarc(&["verify", s(&g), s(&bad)]).status.code(), Some(3));

    let honest = dir.path().join("honest.cert");
    fs::write(&honest, &text).unwrap();
    let sigma = Certificate::parse(&text).unwrap().sigma_minus;
    if sigma > 0 {
        let tight = (sigma - 1).to_string();
        assert_eq!(backarc(&["verify", s(&g), s(&honest), "--bound", &tight]).status.code(), Some(3));
    }
}

#[test]
fn cycle_on_non_two_connected_input_is_a_precondition_failure() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(&dir, "fig.dg", "fig1:k=3,m=3,seed=0");
    let out = backarc(&["solve-cycle", s(&g)]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.starts_with("error: reason=not-2-connected"), "{stderr}");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_and_independent_triples_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("bad.dg");
    fs::write(&g, "this is not a digraph\n").unwrap();
    let out = backarc(&["solve-path", s(&g)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: reason=parse"));

    let sparse = dir.path().join("sparse.dg");
    fs::write(&sparse, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let out = backarc(&["solve-path", s(&sparse)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: reason=alpha-at-least-3"));
}

#[test]
fn oracle_reports_gadget_minimum_and_witness() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(&dir, "dk.dg", "dk:k=2,randomized=false,seed=0");
    let out = ok(&["oracle", "--cycle", s(&g)]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("minimum 4"));
    let witness: Vec<usize> = lines
        .next()
        .and_then(|l| l.strip_prefix("witness "))
        .unwrap()
        .split(' ')
        .map(|t| t.parse().unwrap())
        .collect();
    let header = fs::read_to_string(&g).unwrap();
    let n: usize = header.lines().find(|l| !l.starts_with('#')).unwrap().split(' ').next().unwrap().parse().unwrap();
    let mut sorted = witness.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..n).collect::<Vec<_>>());
    assert!(lines.next().unwrap().starts_with("states "));

    let cert = Certificate::parse(&ok(&["solve-cycle", s(&g)])).unwrap();
    assert!((4..=5).contains(&cert.sigma_minus));
}

#[test]
fn bench_writes_one_row_per_seed() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("bench.csv");
    ok(&[
        "bench",
        "--spec",
        "alpha2:n=8,digon=0.2,conn=two,mode=bipartite,density=0.5,seed=0",
        "--spec",
        "semicomplete:n=7,digon=0.2,seed=0",
        "--seeds",
        "0..4",
        "--jobs",
        "2",
        "-o",
        s(&csv_path),
    ]);
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["instance", "n", "sigma_constructive", "sigma_oracle", "bound", "case", "runtime_us", "status"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    for row in &rows {
        let constructive: usize = row[2].parse().unwrap();
        let exact: usize = row[3].parse().unwrap();
        assert!(exact <= constructive && constructive <= 5, "{row:?}");
        assert_eq!(&row[7], "ok");
    }
    assert!(rows[0][0].ends_with("seed=0") && rows[3][0].ends_with("seed=3"));
}

#[test]
fn export_dot_marks_backward_arcs() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(&dir, "fig.dg", "fig1:k=3,m=3,seed=0");
    let cert = dir.path().join("p.cert");
    ok(&["solve-path", s(&g), "-o", s(&cert)]);
    let plain = ok(&["export-dot", s(&g)]);
    assert!(plain.starts_with("digraph"));
    let marked = ok(&["export-dot", s(&g), "--certificate", s(&cert)]);
    assert!(marked.len() > plain.len());
    assert!(marked.trim_end().ends_with('}'));
}
