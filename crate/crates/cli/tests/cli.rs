use std::process::{Command, Output};

fn rqr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rqr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = rqr(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn symbol_subcommands() {
    assert_eq!(ok(&["symbol", "quartic", "29", "5"]), "-1\n");
    assert_eq!(ok(&["symbol", "quartic", "5", "29"]), "-1\n");
    assert_eq!(ok(&["symbol", "quartic", "-29", "5"]), "1\n");
    assert_eq!(ok(&["symbol", "quartic", "17", "8"]), "1\n");
    assert_eq!(ok(&["symbol", "jacobi", "2", "15"]), "1\n");
    assert_eq!(ok(&["symbol", "jacobi", "3", "9"]), "0\n");
    assert_eq!(ok(&["symbol", "quartic2", "17"]), "1\n");
    assert_eq!(ok(&["symbol", "quartic2", "41"]), "-1\n");
}

#[test]
fn constructions() {
    assert_eq!(ok(&["decompose", "13"]), "3 2\n");
    assert_eq!(ok(&["decompose", "65"]), "1 8\n");
    assert_eq!(ok(&["alpha", "5"]), "-5 -2 1\n");
    assert_eq!(ok(&["alpha", "65"]), "65 8 1\n");
    assert_eq!(ok(&["unit", "13"]), "18 5\n");
    assert_eq!(ok(&["unit", "61"]), "29718 3805\n");
}

#[test]
fn verify_json_and_table() {
    assert_eq!(
        ok(&["verify", "ec", "--m", "65", "--p", "61", "--format", "json"]),
        "{\"law\":\"ec\",\"inputs\":{\"m\":65,\"p\":61},\"sides\":[1,1],\"match\":true,\"skipped\":null}\n"
    );
    let line = ok(&["verify", "burde", "--m", "13", "--n", "17"]);
    assert!(line.contains("\"sides\":[-1,-1,-1]"), "{line}");
    assert!(line.contains("\"match\":true"));
    let row = ok(&["verify", "scholz-mutual", "--m", "13", "--n", "61", "--format", "table"]);
    assert!(row.contains("MATCH"), "{row}");
    let skipped = ok(&["verify", "scholz", "--m", "5", "--n", "13"]);
    assert!(skipped.contains("\"match\":false") && !skipped.contains("\"skipped\":null"));
    let furuta = ok(&["verify", "furuta", "--m", "65", "--n", "61"]);
    assert!(furuta.contains("\"sides\":[-1,-1]"), "{furuta}");
    let split = ok(&["verify", "furuta", "--m", "65", "--n", "61", "--splits"]);
    assert!(split.contains("\"sides\":[-1,-1,-1]"), "{split}");
}

#[test]
fn verify_with_oracle_appends_sides() {
    let line = ok(&["verify", "ec", "--m", "5", "--p", "29", "--oracle"]);
    assert!(line.contains("\"sides\":[-1,-1,-1,-1]"), "{line}");
    let line = ok(&["verify", "gauss2", "--p", "73", "--oracle"]);
    assert!(line.contains("\"match\":true"), "{line}");
}

#[test]
fn genus_output() {
    let json = ok(&["genus", "--d", "145"]);
    assert!(
        json.contains("\"c4_count\":1") && json.contains("\"scholz_equal\":true"),
        "{json}"
    );
    let json = ok(&["genus", "--d", "65"]);
    assert!(json.contains("\"c4_count\":0"));
    let table = ok(&["genus", "--d", "1105", "--format", "table"]);
    assert_eq!(table.lines().count(), 5);
}

#[test]
fn sweep_prints_aggregate() {
    let out = ok(&["sweep", "scholz", "--m-max", "200", "--n-max", "200"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["law"], "scholz");
    assert_eq!(v["mismatched"], 0);
    assert_eq!(v["checked"], v["matched"]);
    assert!(v["checked"].as_u64().unwrap() > 0);

    let out = ok(&["sweep", "ec", "--m-max", "5", "--p-max", "99"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["checked"], 4);
}

#[test]
fn sweep_output_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for jobs in ["1", "3", "8"] {
        let path = dir.path().join(format!("burde-{jobs}.jsonl"));
        let stdout = ok(&[
            "sweep",
            "burde",
            "--m-max",
            "400",
            "--n-max",
            "400",
            "--all-reps",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        files.push((stdout, std::fs::read(&path).unwrap()));
    }
    assert!(!files[0].1.is_empty());
    assert!(files.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn exit_codes() {
    assert_eq!(rqr(&["bogus"]).status.code(), Some(1));
    assert_eq!(rqr(&["symbol", "quartic", "x", "5"]).status.code(), Some(1));
    assert_eq!(rqr(&["symbol", "quartic", "2", "7"]).status.code(), Some(1));
    assert_eq!(rqr(&["symbol", "quartic", "2", "5"]).status.code(), Some(1));
    assert_eq!(rqr(&["decompose", "21"]).status.code(), Some(1));
    assert_eq!(rqr(&["unit", "205"]).status.code(), Some(1));
    assert_eq!(rqr(&["verify", "ec", "--m", "65"]).status.code(), Some(1));
    assert_eq!(
        rqr(&["symbol", "jacobi", "1", "1000000000000000000000"]).status.code(),
        Some(1)
    );
    assert_eq!(rqr(&["genus", "--d", "5"]).status.code(), Some(1));
    assert_eq!(rqr(&["--help"]).status.code(), Some(0));
    assert_eq!(rqr(&["--version"]).status.code(), Some(0));
}

#[test]
fn unwritable_out_path_is_an_input_error() {
    let o = rqr(&["sweep", "gauss2", "--p-max", "100", "--out", "/nonexistent/dir/x.jsonl"]);
    assert_eq!(o.status.code(), Some(1));
}
