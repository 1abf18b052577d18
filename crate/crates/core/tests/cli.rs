use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_partition-logic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn value(v: &Value, key: &str) -> f64 {
    v["outputs"][key]["value"].as_f64().unwrap_or_else(|| panic!("{key}: {}", v["outputs"][key]))
}

fn max_residual(v: &Value) -> f64 {
    v["residuals"]
        .as_object()
        .unwrap()
        .values()
        .map(|r| r["value"].as_f64().unwrap())
        .fold(0.0, f64::max)
}

#[test]
fn entropy_partition_output() {
    let v = json(&["entropy", "0,1|2"]);
    assert_eq!(v["command"], "entropy");
    assert_eq!(v["outputs"]["h"]["exact"], Value::Null);
    assert!((value(&v, "h") - 4.0 / 9.0).abs() < 1e-12);
    assert!((value(&v, "H") - 0.9182958340544896).abs() < 1e-12);
    assert_eq!(v["outputs"]["H"]["unit"], "bits");
    assert_eq!(value(&v, "dits"), 4.0);
    assert!(max_residual(&v) < 1e-9);

    let v = json(&["--exact", "entropy", "0,1|2"]);
    assert_eq!(v["outputs"]["h"]["exact"], "4/9");
    assert_eq!(v["residuals"]["h_vs_block_form"]["exact"], "0");

    let v = json(&["entropy", "0|1|2|3", "--base", "e"]);
    assert_eq!(value(&v, "h"), 0.75);
    assert!((value(&v, "H") - 4f64.ln()).abs() < 1e-12);
    assert_eq!(v["outputs"]["H"]["unit"], "nats");

    let v = json(&["entropy", "1"]);
    assert_eq!((value(&v, "h"), value(&v, "H")), (0.0, 0.0));
}

#[test]
fn entropy_weights_and_sizes() {
    let v = json(&["entropy", "0,1|2", "--weights", "1/2,1/4,1/4"]);
    assert_eq!(v["outputs"]["h"]["exact"], "3/8");
    let out = run(&["entropy", "0,1|2", "--weights", "1/2,1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn parse_errors_exit_one() {
    for args in [
        &["entropy", "0,1|1"][..],
        &["entropy", "0,x|2"],
        &["entropy", "0.5,0.6"],
        &["joint", "0.5,-0.5;0.5,0.5"],
        &["ops", "xor", "0|1", "0,1"],
        &["ops", "join", "0|1", "0|1|2"],
        &["compare", "1", "0.5,0.5"],
        &["lattice", "13"],
        &["lattice", "0"],
        &["verify", "--max-n", "7"],
        &["sample", "triples", "1/2,1/2"],
        &["stirling", "3,0"],
        &["nosuchcommand"],
        &["entropy"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn joint_table_rows() {
    let v = json(&["joint", "1/4,1/4;1/4,1/4"]);
    assert_eq!(value(&v, "I(x,y)"), 0.0);
    assert_eq!(v["outputs"]["m(x,y)"]["exact"], "1/4");
    assert!(max_residual(&v) < 1e-12);
    for key in ["h(x)", "h(y)", "h(x,y)", "h(x|y)", "h(y|x)", "H(x)", "H(y)", "H(x,y)", "H(x|y)", "H(y|x)"] {
        assert!(v["outputs"].get(key).is_some(), "{key}");
    }

    let v = json(&["joint", "0.5,0\n0,0.5"]);
    assert!((value(&v, "I(x,y)") - 1.0).abs() < 1e-12);
    assert_eq!(value(&v, "m(x,y)"), 0.5);
    assert_eq!(value(&v, "h(x|y)"), 0.0);
    assert!(max_residual(&v) < 1e-9);
}

#[test]
fn joint_from_file_and_stdin() {
    let dir = std::env::temp_dir().join(format!("partition-logic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("joint.csv");
    std::fs::write(&path, "# x rows, y columns\n1/4,1/4\n1/2,0\n").unwrap();
    let v = json(&["joint", path.to_str().unwrap()]);
    assert!((value(&v, "H(x|y)") - 0.6887218755408672).abs() < 1e-12);
    assert!((value(&v, "I(x,y)") - 0.31127812445913294).abs() < 1e-12);
    std::fs::remove_dir_all(&dir).unwrap();

    let mut child = bin()
        .args(["joint", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0,1\n0,0\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["h(x)", "h(x,y)", "m(x,y)", "H(x,y)", "I(x,y)"] {
        assert_eq!(value(&v, key), 0.0, "{key}");
    }
}

#[test]
fn ops_results() {
    let cases = [
        ("join", "0,1|2,3", "0,2|1,3", "0|1|2|3"),
        ("meet", "0,1|2,3", "0,2|1,3", "0,1,2,3"),
        ("implies", "0,1|2,3", "0,1,2|3", "0|1|2,3"),
    ];
    for (op, a, b, expected) in cases {
        let v = json(&["ops", op, a, b]);
        assert_eq!(v["outputs"]["result"], expected, "{op}");
        assert_eq!(max_residual(&v), 0.0);
    }
}

#[test]
fn compare_outputs() {
    let v = json(&["compare", "1,0", "0,1"]);
    assert_eq!(value(&v, "d(p||q)"), 1.0);
    assert_eq!(value(&v, "h(p||q)"), 1.0);
    assert_eq!(v["outputs"]["D(p||q)"]["value"], "inf");

    let v = json(&["compare", "0.5,0.5", "0.25,0.75"]);
    assert!((value(&v, "d(p||q)") - 0.0625).abs() < 1e-15);
    assert!((value(&v, "D(p||q)") - 0.20751874963942185).abs() < 1e-12);
    assert!((value(&v, "D(q||p)") - 0.18872187554086717).abs() < 1e-12);
    assert!((value(&v, "H(p||q)") - 1.207518749639422).abs() < 1e-12);
    assert!(max_residual(&v) < 1e-9);

    let v = json(&["compare", "1/3,2/3", "1/3,2/3"]);
    for key in ["D(p||q)", "D_s(p||q)", "d(p||q)"] {
        assert_eq!(value(&v, key), 0.0, "{key}");
    }
}

#[test]
fn verify_and_lattice() {
    let v = json(&["verify", "--max-n", "4", "--trials", "100", "--seed", "3"]);
    assert_eq!(value(&v, "pairs_checked"), 225.0);
    assert_eq!(v["passed"], true);

    let v = json(&["lattice", "3", "--dot"]);
    assert_eq!(value(&v, "partitions"), 5.0);
    assert!(v["outputs"]["dot"].as_str().unwrap().starts_with("digraph"));
    let v = json(&["lattice", "1"]);
    assert_eq!(value(&v, "edges"), 0.0);
}

#[test]
fn sample_reports_are_reproducible() {
    let args = ["sample", "pairs", "1/2,1/2", "--trials", "1000000", "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(value(&v, "target"), 0.5);
    assert!(value(&v, "abs_error") < 0.002);
    for key in ["estimate", "target", "abs_error", "std_error", "trials", "seed"] {
        assert!(v["outputs"].get(key).is_some(), "{key}");
    }

    let v = json(&["sample", "typical", "1/3,1/3,1/3", "--length", "1000", "--samples", "10"]);
    assert!((value(&v, "estimate") - 3f64.log2()).abs() < 1e-12);
    let v = json(&["sample", "seqavg", "0,1,0", "--trials", "500"]);
    assert_eq!(value(&v, "estimate"), 0.0);
}

#[test]
fn stirling_output() {
    let v = json(&["stirling", "6,6"]);
    assert!((value(&v, "S_exact") - 924f64.ln() / 12.0).abs() < 1e-12);
    assert_eq!(v["outputs"]["S_exact"]["unit"], "nats");
    let v = json(&["stirling", "250,250,250,250"]);
    assert!(value(&v, "err3") < value(&v, "err2"));
}

#[test]
fn pretty_table() {
    let out = run(&["--pretty", "ops", "meet", "0,1|2", "0|1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ops\n"));
    assert!(text.contains("result"));
    assert!(text.contains("0,1,2"));
}
