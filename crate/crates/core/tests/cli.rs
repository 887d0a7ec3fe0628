use std::path::Path;
use std::process::{Command, Output};

use gtorbit::io::{reserialize, MatrixJson, PatternJson, ReportJson, SkeletonJson};

fn gtorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtorbit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn analyze_reports_bound() {
    let o = gtorbit(&["analyze", "5,5,4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r: ReportJson = serde_json::from_str(&text).unwrap();
    assert_eq!(
        (r.d, r.gromov_lower_bound.as_str(), r.min_gap.as_str()),
        (2, "1", "1")
    );
    assert_eq!(reserialize::<ReportJson>(&text).unwrap(), text);

    let r: ReportJson = serde_json::from_str(&stdout(&gtorbit(&["analyze", "3,2,1"]))).unwrap();
    assert_eq!((r.d, r.gromov_lower_bound.as_str()), (3, "1"));

    let r: ReportJson = serde_json::from_str(&stdout(&gtorbit(&["analyze", "1/2,-1/3"]))).unwrap();
    assert_eq!(r.gromov_lower_bound, "5/6");
}

#[test]
fn analyze_exit_codes() {
    let o = gtorbit(&["analyze", "4,4,3,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2 distinct eigenvalues are repeated"));
    assert_eq!(gtorbit(&["analyze", "1,2"]).status.code(), Some(1));
    assert_eq!(gtorbit(&["analyze", "1.5,1"]).status.code(), Some(1));
    assert_eq!(gtorbit(&["analyze"]).status.code(), Some(1));
    assert_eq!(gtorbit(&["bogus"]).status.code(), Some(1));
    assert_eq!(gtorbit(&["--help"]).status.code(), Some(0));
    assert_eq!(
        gtorbit(&["--tol", "-1", "analyze", "2,1"]).status.code(),
        Some(1)
    );
}

#[test]
fn pattern_then_reconstruct() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"n": 3, "re": [[1, 0, 0], [0, 5, 0], [0, 0, 3]]}"#,
    );
    let o = gtorbit(&["pattern", &m]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let p: PatternJson = serde_json::from_str(&text).unwrap();
    assert_eq!(p.top, vec!["5.0", "3.0", "1.0"]);
    assert_eq!(p.rows, vec![vec!["1.0"], vec!["5.0", "1.0"]]);
    assert_eq!(reserialize::<PatternJson>(&text).unwrap(), text);

    // numeric patterns are not accepted where exactness is required
    let pf = write(dir.path(), "p_float.json", &text);
    assert_eq!(gtorbit(&["reconstruct", &pf]).status.code(), Some(1));

    let exact = r#"{"n": 3, "top": ["5", "5", "4"], "rows": [["5"], ["5", "9/2"]]}"#;
    let pe = write(dir.path(), "p.json", exact);
    let o = gtorbit(&["reconstruct", &pe]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(reserialize::<MatrixJson>(&text).unwrap(), text);
    let back = write(dir.path(), "back.json", &text);
    let p: PatternJson = serde_json::from_str(&stdout(&gtorbit(&["pattern", &back]))).unwrap();
    let pf = p.to_float().unwrap();
    assert!((pf.entry(2, 2) - 4.5).abs() < 1e-8 && (pf.entry(1, 1) - 5.0).abs() < 1e-8);
}

#[test]
fn reconstruct_rejects_bad_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n": 2, "top": ["5", "3"], "rows": [["6"]]}"#,
    );
    let o = gtorbit(&["reconstruct", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("interlacing"));
    assert_eq!(
        gtorbit(&["reconstruct", "/nonexistent/p.json"])
            .status
            .code(),
        Some(1)
    );
    let junk = write(dir.path(), "junk.json", "{");
    assert_eq!(gtorbit(&["pattern", &junk]).status.code(), Some(1));
}

#[test]
fn skeleton_graph_json() {
    let text = stdout(&gtorbit(&["skeleton", "3,2,1"]));
    let g: SkeletonJson = serde_json::from_str(&text).unwrap();
    assert_eq!((g.vertices.len(), g.edges.len()), (6, 9));
    assert_eq!(reserialize::<SkeletonJson>(&text).unwrap(), text);
}

#[test]
fn verify_passes() {
    let o = gtorbit(&["verify", "3,1,0", "--trials", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.svg");
    let o = gtorbit(&["plot", "3,2,1", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg.matches("<line").count(), 9);

    let svg = stdout(&gtorbit(&["plot", "5,5,4"]));
    assert_eq!(svg.matches("<circle").count(), 3);
    assert_eq!(gtorbit(&["plot", "4,3,2,1"]).status.code(), Some(2));
}
