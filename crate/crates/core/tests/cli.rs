use std::path::PathBuf;

use admissible::cli::run;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn admissible(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("admissible").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn tetrahedron_json() {
    let k4 = data("k4.graph");
    let o = admissible(&["invariants", &k4, "--json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["phi"], "17/48");
    assert_eq!(v["tau"], "5/16");
    assert_eq!(v["lambda"], "75/112");
    assert_eq!(v["epsilon"], "11/6");
    assert_eq!(v["delta"]["1"], "0/1");
    assert_eq!(v["gbar"], 3);
}

#[test]
fn eval_output_reads_back_as_a_graph() {
    let o = admissible(&["catalog", "eval", "g2.IV", "--lengths", "a=3/2,b=1/5,c=2,d=7/4"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let dir = std::env::temp_dir().join(format!("admissible-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2-iv.graph");
    std::fs::write(&path, &o.stdout).unwrap();

    let back = admissible(&["invariants", path.to_str().unwrap()]);
    assert_eq!(back.code, 0, "{}", back.stderr);
    // Every `# name value` line of eval reappears verbatim (minus the `# `).
    let expected: Vec<&str> = o
        .stdout
        .lines()
        .filter(|l| l.starts_with("# ") && !l.starts_with("# family"))
        .map(|l| &l[2..])
        .collect();
    let got: Vec<&str> = back.stdout.lines().collect();
    assert_eq!(got, expected);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn resistance_json_is_symmetric() {
    let o = admissible(&["resistance", &data("theta.graph"), "--json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let m = v["resistance"].as_array().unwrap();
    assert_eq!(m.len(), v["ids"].as_array().unwrap().len());
    assert_eq!(m[0][1], m[1][0]);
    assert_eq!(m[0][0], "0/1");
}

#[test]
fn identities_pass() {
    let o = admissible(&["verify", "identities"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("probe"));
    let one = admissible(&["verify", "identities", "--name", "xiv.D_equals_M", "--json"]);
    assert_eq!(one.code, 0);
    assert!(one.stdout.contains("\"D = M\""));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(admissible(&["catalog", "eval", "g9.X", "--lengths", "a=1"]).code, 2);
    assert_eq!(admissible(&["catalog", "eval", "g1.I", "--lengths", "a=0"]).code, 2);
    assert_eq!(admissible(&["catalog", "eval", "g1.I", "--lengths", "a=1,z=2"]).code, 2);
    assert_eq!(admissible(&["invariants", "/nonexistent/file.graph"]).code, 2);
    assert_eq!(admissible(&["table", "--genus", "4"]).code, 2);
    assert_eq!(admissible(&["bogus"]).code, 2);
    let bad = admissible(&["invariants", &data("disconnected.graph")]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.starts_with("error:"), "{}", bad.stderr);
}

#[test]
fn help_exits_0() {
    let o = admissible(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("catalog"));
}

#[test]
fn table_csv_and_json_agree() {
    let csv = admissible(&["table", "--genus", "2", "--lengths", "a=1,b=2,c=3"]);
    assert_eq!(csv.code, 0, "{}", csv.stderr);
    let json = admissible(&["table", "--genus", "2", "--lengths", "a=1,b=2,c=3", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json.stdout).unwrap();

    let mut reader = csv::Reader::from_reader(csv.stdout.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let records: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(records.len(), rows.len());
    assert_eq!(rows.len(), 14);
    let phi = headers.iter().position(|h| h == "phi").unwrap();
    for (rec, row) in records.iter().zip(&rows) {
        assert_eq!(rec.get(0).unwrap(), row["family"]);
        assert_eq!(rec.get(phi).unwrap(), row["phi"]);
    }
}

#[test]
fn catalog_list_and_check() {
    let list = admissible(&["catalog", "list", "--json"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&list.stdout).unwrap();
    assert_eq!(v.len(), 41);
    let check = admissible(&["catalog", "check", "--samples", "5", "--seed", "3"]);
    assert_eq!(check.code, 0, "{}", check.stdout);
    assert!(check.stdout.contains("40/40"));
}

#[test]
fn bounds_for_one_family() {
    let o = admissible(&["verify", "bounds", "--family", "g2.III", "--samples", "50", "--json"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn machine_output_is_byte_identical_across_runs() {
    let runs = [
        vec!["catalog", "check", "--samples", "10", "--seed", "11", "--json"],
        vec!["verify", "bounds", "--family", "g3.XIV", "--samples", "40", "--seed", "5", "--json"],
        vec!["table", "--genus", "3", "--lengths", "a=1/2,b=3", "--format", "json"],
        vec!["verify", "identities", "--json"],
    ];
    for args in &runs {
        let first = admissible(args);
        let second = admissible(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty());
    }
}
