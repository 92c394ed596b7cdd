use std::collections::BTreeSet;
use std::process::Command;

use derangement_spectrum::cli::{self, TableDocument};
use derangement_spectrum::verify::ReferenceTable;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("derangement-spectrum").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn csv_pairs(text: &str) -> BTreeSet<(String, String)> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[1].to_string(), r[2].to_string())
        })
        .collect()
}

#[test]
fn table_csv_shape() {
    let out = ok(&["table", "5", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,partition,eta,sign,multiplicity"));
    assert_eq!(lines.count(), 7);
    assert!(out.contains("5,5,44,1,1\n"));
}

#[test]
fn restricted_table_matches_reference() {
    let out = ok(&["table", "11", "--min-first-part", "5", "--format", "csv"]);
    let got = csv_pairs(&out);
    assert_eq!(got.len(), 29);
    let table = ReferenceTable::embedded();
    let want: BTreeSet<(String, String)> = table
        .for_n(11)
        .map(|e| (e.partition.to_string(), e.eta.to_string()))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let out = ok(&["table", "7", "--format", "json"]);
    let doc: TableDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.n, 7);
    assert_eq!(doc.coverage, "full");
    assert_eq!(doc.entries.len(), 15);
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", out);
}

#[test]
fn formats_agree() {
    let csv_out = csv_pairs(&ok(&["table", "8", "--format", "csv"]));
    let doc: TableDocument = serde_json::from_str(&ok(&["table", "8", "--format", "json"])).unwrap();
    let json_out: BTreeSet<(String, String)> = doc
        .entries
        .iter()
        .map(|r| {
            let p = derangement_spectrum::Partition::new(r.partition.clone()).unwrap();
            (p.to_string(), r.eta.clone())
        })
        .collect();
    let text_out: BTreeSet<(String, String)> = ok(&["table", "8"])
        .lines()
        .skip(1)
        .map(|l| {
            let cols: Vec<&str> = l.split_whitespace().collect();
            (cols[1].to_string(), cols[2].to_string())
        })
        .collect();
    assert_eq!(csv_out.len(), 22);
    assert_eq!(csv_out, json_out);
    assert_eq!(csv_out, text_out);
}

#[test]
fn jobs_do_not_change_output() {
    for format in ["text", "csv", "json"] {
        let one = ok(&["table", "13", "--format", format]);
        let four = ok(&["table", "13", "--format", format, "--jobs", "4"]);
        assert_eq!(one, four, "{format}");
    }
}

#[test]
fn eig_reports_sign_and_multiplicity() {
    let out = ok(&["eig", "4,2,1^2"]);
    assert!(out.contains("eta           21\n"), "{out}");
    assert!(out.contains("sign          +1\n"));
    assert!(out.contains("multiplicity  8100 (dim 90)\n"));
    for method in ["new", "renteln", "schur", "character"] {
        assert!(
            ok(&["eig", "4,2,1^2", "--method", method]).contains("eta           21\n"),
            "{method}"
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eig", "1^13", "--method", "character"]).0, cli::EXIT_ORACLE_CAP);
    assert_eq!(
        run(&["eig", "1^13", "--method", "character", "--oracle-cap", "13"]).0,
        cli::EXIT_OK
    );
    assert_eq!(run(&["verify", "--suite", "asp", "--max-n", "1"]).0, cli::EXIT_USAGE);
    assert_eq!(run(&["verify", "--suite", "cross", "--max-n", "10"]).0, cli::EXIT_OK);
    assert_eq!(
        run(&["verify", "--suite", "dominance", "--max-n", "6"]).0,
        cli::EXIT_VERIFY_FAILED
    );
    assert_eq!(run(&["eig", "2,3"]).0, cli::EXIT_USAGE);
    assert_eq!(run(&["chain", "3,3", "4,1,1"]).0, cli::EXIT_ORDER);
    assert_eq!(run(&["chain", "3,3", "4,1"]).0, cli::EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, cli::EXIT_USAGE);
}

#[test]
fn chain_single_move() {
    let out = ok(&["chain", "4,1,1", "4,2"]);
    assert!(out.starts_with("4,1^2 -> 4,2: 1 move\n"), "{out}");
    assert!(out.contains("|eta| = 13"));
    assert!(out.contains("|eta| = 15"));
}

#[test]
fn binary_forwards_exit_code() {
    let bin = env!("CARGO_BIN_EXE_derangement-spectrum");
    let status = Command::new(bin).args(["eig", "not-a-partition"]).output().unwrap();
    assert_eq!(status.status.code(), Some(cli::EXIT_USAGE));
    let done = Command::new(bin)
        .args(["table", "3", "--format", "csv"])
        .output()
        .unwrap();
    assert!(done.status.success());
    assert_eq!(String::from_utf8(done.stdout).unwrap().lines().count(), 4);
}
