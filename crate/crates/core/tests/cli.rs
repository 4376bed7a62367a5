use std::process::{Command, Output};

use nakayama::{InvariantsReport, SweepReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_json_round_trips() {
    let o = run(&["invariants", "--kupisch", "3,4,3,3,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: InvariantsReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r, InvariantsReport::compute(&"3,4,3,3,2".parse().unwrap()));
    assert_eq!((r.findim, r.findim_op), (1, 1));
}

#[test]
fn relations_input_matches_kupisch_input() {
    let a = run(&["invariants", "--relations", "n=5;1:3,3:3,5:2", "--json"]);
    let b = run(&["invariants", "--kupisch", "3,4,3,3,2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn table_output() {
    let o = run(&["invariants", "--kupisch", "3,3,2", "--table"]);
    let s = stdout(&o);
    assert!(s.contains("del_per_simple   S1=0 S2=1 S3=0"), "{s}");
    assert!(s.contains("epsilon_kupisch  2,2"), "{s}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["invariants", "--kupisch", "3,1,2"][..],
        &["invariants", "--kupisch", "2,4,2"],
        &["invariants", "--relations", "n=3;1:2,2:5"],
        &[
            "invariants",
            "--kupisch",
            "2,2",
            "--relations",
            "n=2;1:2,2:2",
        ],
        &["invariants"],
        &["sweep", "--rank-min", "0"],
        &["sweep", "--checks", "NOT_A_CHECK"],
        &["resolve", "--kupisch", "2,2", "--module", "top=1,len=5"],
        &["resolve", "--kupisch", "2,2", "--module", "junk"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = run(&["invariants", "--kupisch", "3,1,2"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("index 2"), "{err}");
}

#[test]
fn resolve_annotations() {
    let o = run(&["resolve", "--kupisch", "3,3,2", "--module", "top=1,len=1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("periodic, period 2"), "{s}");
    assert!(s.contains("pdim inf"), "{s}");

    let o = run(&["resolve", "--kupisch", "3,3,2", "--module", "top=1,len=3"]);
    assert!(stdout(&o).contains("projective, pdim 0"));

    let o = run(&["resolve", "--kupisch", "3,2,2", "--module", "top=2,len=1"]);
    let s = stdout(&o);
    assert!(s.contains("B-filtration"), "{s}");
    assert!(s.ends_with("pdim 3\n"), "{s}");
}

#[test]
fn epsilon_command() {
    let o = run(&["epsilon", "--kupisch", "5,5,4,5,4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["epsilon_kupisch"], serde_json::json!([3, 3, 3]));

    let o = run(&["epsilon", "--kupisch", "3,4,3,3,2"]);
    let s = stdout(&o);
    assert!(s.contains("new_vertex 2 <-> [2..3] (2,3)"), "{s}");
    assert!(s.contains("terminal Selfinjective"), "{s}");

    let o = run(&["epsilon", "--kupisch", "2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("undefined"));
}

#[test]
fn check_command() {
    let o = run(&[
        "check",
        "--kupisch",
        "3,4,3,3,2",
        "--checks",
        "THM_MAIN,DEL_LE_PHI",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("THM_MAIN") && s.contains("DEL_LE_PHI"));
    assert!(!s.contains("PHI_EVEN"));

    let o = run(&["check", "--kupisch", "3,2,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcomes"]["THM_MAIN"]["status"], "pass");
}

#[test]
fn sweep_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    for (path, jobs) in [(&json, "2"), (&csv, "1")] {
        let o = run(&[
            "sweep",
            "--rank-max",
            "3",
            "--max-len",
            "4",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(String::from_utf8(o.stderr).unwrap().contains("wall time"));
    }
    let report = SweepReport::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.failure_count(), 0);
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("canonical_kupisch,rank,gldim"));
    assert_eq!(csv_text.lines().count(), report.algebras + 1);
}
