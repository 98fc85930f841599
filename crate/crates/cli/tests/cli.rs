use std::process::Command;

use moonshine_cli::{run, OutputTable, EXIT_DATASET, EXIT_USAGE, EXIT_VERIFICATION};
use moonshine_core::data::{save_dataset, Dataset};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn moonshine(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("moonshine").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn csv_table(args: &[&str]) -> OutputTable {
    let mut full = args.to_vec();
    full.extend(["--format", "csv"]);
    let r = moonshine(&full);
    assert_eq!(r.code, 0, "{}", r.stderr);
    OutputTable::from_csv(&r.stdout).unwrap()
}

fn trivial_dataset(dir: &tempfile::TempDir) -> String {
    let path = dir.path().join("trivial.json");
    save_dataset(&Dataset::trivial_group(), &path).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn jcoeffs_to_three() {
    let t = csv_table(&["jcoeffs", "--max", "3"]);
    assert_eq!(t.columns(), ["j", "c(j)"]);
    let want = [["-1", "1"], ["0", "0"], ["1", "196884"], ["2", "21493760"], ["3", "864299970"]];
    assert_eq!(t.rows(), want.map(|r| r.map(String::from).to_vec()));
}

#[test]
fn large_dimensions_print_in_full() {
    let t = csv_table(&["dims", "--max", "43"]);
    let last = t.rows().last().unwrap();
    assert_eq!(last, &["43", "12113398911563006366044489650277199"]);
    assert_eq!(t.rows()[2], ["1", "196883"]);
    assert_eq!(t.rows()[1], ["0", "0"]);
}

#[test]
fn verify_gl2_reports_six_of_six() {
    for j in ["-1", "1", "2", "3", "10"] {
        let r = moonshine(&["verify-gl2", "--j", j]);
        assert_eq!(r.code, 0, "j = {j}: {}", r.stderr);
        assert!(r.stdout.contains("6/6 relations pass"), "j = {j}: {}", r.stdout);
        assert!(r.stdout.contains("3/3 sl2(-1) relations pass"));
    }
}

#[test]
fn wrong_pairing_sign_is_a_verification_failure() {
    // u_{2j+1} u = (-1)^j (u, u), so plus fails for odd j and minus for even j
    for (j, sign) in [("1", "plus"), ("2", "minus"), ("-1", "minus")] {
        let r = moonshine(&["verify-gl2", "--j", j, "--pairing-sign", sign]);
        assert_eq!(r.code, EXIT_VERIFICATION, "j = {j}, {sign}");
        assert!(r.stderr.contains("pairing mismatch"), "{}", r.stderr);
    }
    for (j, sign) in [("1", "minus"), ("2", "plus"), ("-1", "plus")] {
        assert_eq!(moonshine(&["verify-gl2", "--j", j, "--pairing-sign", sign]).code, 0, "j = {j}, {sign}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["bogus"][..], &["jcoeffs", "--max", "-3"], &["verify-gl2"], &["verify-gl2", "--j", "0"], &["replicate"]] {
        let r = moonshine(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}");
        assert!(!r.stderr.is_empty());
    }
    let help = moonshine(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify-gl2"));
}

#[test]
fn csv_round_trips_and_agrees_with_json_like() {
    let dir = tempfile::tempdir().unwrap();
    let data = trivial_dataset(&dir);
    for args in [
        &["jcoeffs", "--max", "30"][..],
        &["dims", "--max", "30"],
        &["eta", "--max", "30"],
        &["cartan", "--depth", "4"],
        &["replicate", "--data", &data, "--max", "12"],
        &["verify-gl2", "--j", "3"],
    ] {
        let mut csv_args = args.to_vec();
        csv_args.extend(["--format", "csv"]);
        let text = moonshine(&csv_args).stdout;
        let t = OutputTable::from_csv(&text).unwrap();
        assert_eq!(t.render(moonshine_cli::Format::Csv), text, "{args:?}");

        let mut json_args = args.to_vec();
        json_args.extend(["--format", "json-like"]);
        let v: serde_json::Value = serde_json::from_str(&moonshine(&json_args).stdout).unwrap();
        assert_eq!(v["columns"], serde_json::json!(t.columns()), "{args:?}");
        assert_eq!(v["rows"], serde_json::json!(t.rows()), "{args:?}");
    }
}

#[test]
fn cartan_blocks() {
    let t = csv_table(&["cartan", "--depth", "2"]);
    assert_eq!(t.columns(), ["i", "c(i)", "-1", "1", "2"]);
    assert_eq!(t.rows()[0], ["-1", "1", "2", "0", "-1"]);
    assert_eq!(t.rows()[1], ["1", "196884", "0", "-2", "-3"]);
    assert_eq!(t.rows()[2], ["2", "21493760", "-1", "-3", "-4"]);
}

#[test]
fn replicate_on_the_trivial_group_is_j() {
    let dir = tempfile::tempdir().unwrap();
    let data = trivial_dataset(&dir);
    let rep = csv_table(&["replicate", "--data", &data, "--max", "40"]);
    let j = csv_table(&["jcoeffs", "--max", "40"]);
    assert_eq!(rep.columns(), ["j", "1A"]);
    assert_eq!(rep.rows(), j.rows());
    let par = csv_table(&["replicate", "--data", &data, "--max", "40", "--parallel"]);
    assert_eq!(par, rep);
}

#[test]
fn trivial_group_fails_the_nontriviality_check() {
    // every vector of V is fixed, so mult_1 = c(j) >= dim P_{j+1}
    let dir = tempfile::tempdir().unwrap();
    let data = trivial_dataset(&dir);
    let r = moonshine(&["check-nontrivial", "--data", &data, "--max", "10"]);
    assert_eq!(r.code, EXIT_VERIFICATION);
    assert!(r.stdout.contains("0/10 rows non-trivial"), "{}", r.stdout);
    let mult = csv_table(&["mult", "--data", &data, "--max", "5"]);
    assert_eq!(mult.rows()[3], ["2", "21493760"]);
}

#[test]
fn dataset_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let data = trivial_dataset(&dir);
    let missing = dir.path().join("absent.json");
    let r = moonshine(&["replicate", "--data", missing.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_DATASET);

    let r = moonshine(&["mult", "--k", "2", "--data", &data, "--max", "5"]);
    assert_eq!(r.code, EXIT_DATASET, "{}", r.stderr);

    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(&data).unwrap().replace("196884", "196885");
    std::fs::write(&bad, text).unwrap();
    let r = moonshine(&["validate-data", "--data", bad.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(r.code, EXIT_DATASET);
    let t = OutputTable::from_csv(&r.stdout).unwrap();
    assert_eq!(t.rows().len(), 1);
    assert!(t.rows()[0][0].contains("1A"), "{:?}", t.rows());

    let ok = moonshine(&["validate-data", "--data", &data, "--format", "csv"]);
    assert_eq!(ok.code, 0);
    assert_eq!(OutputTable::from_csv(&ok.stdout).unwrap().rows()[0], ["1", "1", "valid"]);
}

#[test]
fn out_writes_the_file_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j.csv");
    let r = moonshine(&["jcoeffs", "--max", "5", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let t = OutputTable::from_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(t.rows().len(), 7);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_moonshine");
    let ok = Command::new(bin).args(["verify-gl2", "--j", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("6/6 relations pass"));
    let usage = Command::new(bin).arg("--nonsense").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
