use std::process::{Command, Output, Stdio};
use std::io::Write;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftfact")).args(args).env_remove("SHIFTFACT_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn eval_examples() {
    for (args, want) in [
        (vec!["eval", "--z", "1", "--s", "1", "--n", "4"], "24\n"),
        (vec!["eval", "--z", "3", "--s", "1", "--n", "0"], "1\n"),
        (vec!["eval", "--z", "3", "--s", "1", "--q", "-1"], "0.5\n"),
        (vec!["eval", "--z", "3", "--s", "1", "--q", "-1", "--exact"], "1/2\n"),
        (vec!["eval", "--z", "1/2", "--s", "-1/3", "--n", "3", "--exact"], "-1/72\n"),
        (vec!["eval", "--z", "2", "--s", "1", "--t", "3"], "24\n"),
    ] {
        let o = run(&args);
        assert_eq!((code(&o), stdout(&o).as_str()), (0, want), "{args:?}");
    }
}

#[test]
fn eval_pole_and_usage_errors() {
    let pole = run(&["eval", "--z", "-2", "--s", "1", "--t", "0.5"]);
    assert_eq!(code(&pole), 1);
    assert!(String::from_utf8_lossy(&pole.stderr).contains("pole"));
    assert_eq!(code(&run(&["eval", "--z", "1+", "--s", "1", "--n", "2"])), 2);
    assert_eq!(code(&run(&["eval", "--z", "1", "--s", "1"])), 2);
    assert_eq!(code(&run(&["eval", "--z", "1", "--s", "1", "--n", "2", "--bogus"])), 2);
    assert_eq!(code(&run(&["eval", "--z", "1", "--s", "1", "--t", "2", "--exact"])), 2);
}

#[test]
fn eval_formats() {
    let o = run(&["eval", "--z", "1", "--s", "1", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], serde_json::json!([24.0, 0.0]));
    assert_eq!(v["index"], "n=4");
    let o = run(&["eval", "--z", "1", "--s", "1", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "z,s,index,value\n1,1,n=4,24\n");
}

#[test]
fn det_examples_and_threshold() {
    let o = run(&["det", "--kind", "SShifted", "--nodes", "0,1,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(v["closed"], serde_json::json!([2.0, 0.0]));
    assert_eq!(v["oracle"], serde_json::json!([2.0, 0.0]));

    let o = run(&["det", "--kind", "gammashift", "--nodes", "1,2,3", "--closed-only"]);
    assert_eq!(stdout(&o), "kind      GammaShift\nn         3\nclosed    4\n");
    let o = run(&["det", "--kind", "GammaShift", "--nodes", "1,2,3", "--oracle-only"]);
    assert_eq!(stdout(&o), "kind      GammaShift\nn         3\noracle    4\n");

    let o = run(&["det", "--kind", "SShifted", "--nodes", "0.3+0.1i,1.7,2.2,-0.9", "--s", "0.37", "--threshold", "0"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("differ"));
    assert_eq!(code(&run(&["det", "--kind", "SShifted", "--nodes", "1,2", "--threshold", "-1"])), 2);
}

#[test]
fn det_from_document() {
    let doc = r#"{"schema":1,"kind":"RatioSShifted","s":[0.5,0],"params":{"a":[2,0],"b":[1,1]},"nodes":[[0,0],[1,0],[2,0]]}"#;
    let mut child = Command::new(env!("CARGO_BIN_EXE_shiftfact"))
        .args(["det", "--spec", "-", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("kind,n,closed,oracle,residual\nRatioSShifted,3,"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(code(&run(&["det", "--spec", bad.to_str().unwrap()])), 2);
    let wrong_schema = dir.path().join("v2.json");
    std::fs::write(&wrong_schema, r#"{"schema":2,"kind":"SShifted","nodes":[[0,0]]}"#).unwrap();
    assert_eq!(code(&run(&["det", "--spec", wrong_schema.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["det", "--spec", "/nonexistent/spec.json"])), 2);
    assert_eq!(code(&run(&["det", "--kind", "NoSuchKind", "--nodes", "1,2"])), 2);
}

#[test]
fn det_side_condition_is_an_evaluation_failure() {
    // Repeated nodes are fine for the oracle but the reciprocal entries hit a zero factor.
    let o = run(&["det", "--kind", "InvSShifted", "--nodes", "0,1", "--s", "1"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn sum_methods() {
    let o = run(&["sum", "--a", "1", "--r", "1", "--s", "1", "--p", "1", "--n", "3"]);
    assert_eq!(stdout(&o), "6\n");
    let o = run(&["sum", "--a", "1", "--r", "1", "--s", "-1", "--p", "4", "--n", "3", "--exact", "--method", "all"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "method      value  residual\ndirect      0      0\nrecurrence  0      0\nclosed      0      0\n");
    let o = run(&["sum", "--a", "0.3+i", "--r", "0.7", "--s", "1.1", "--p", "3", "--n", "9", "--method", "all", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3, "closed form skipped for r != ±s:\n{text}");
    let o = run(&["sum", "--a", "1", "--r", "0.5", "--s", "1", "--p", "1", "--n", "3", "--method", "closed"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn rmt_tables() {
    let o = run(&["rmt", "--ensemble", "hermite", "--n", "1..3", "--q", "0,2", "--format", "csv"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "ensemble,params,n,q,parity,value,oracle,route,residual");
    assert_eq!(rows.len(), 7);
    assert!(rows[1].starts_with("hermite,,1,0,+,1,1,quadrature,"), "{}", rows[1]);
    assert!(rows[2].starts_with("hermite,,1,2,+,0.5,0.5,quadrature,"), "{}", rows[2]);

    let o = run(&["rmt", "--ensemble", "jacobi", "--param", "1.5,2.5", "--n", "2", "--s", "1", "--parity", "+", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value = v[0]["value"][0].as_f64().unwrap();
    assert!((value - 0.5).abs() < 1e-12, "{value}");

    let o = run(&["rmt", "--ensemble", "jacobi", "--param", "1.5,2.5", "--n", "2", "--s", "2"]);
    assert_eq!(code(&o), 1);
    let o = run(&["rmt", "--ensemble", "jacobi", "--param", "1.5,2.5", "--n", "2", "--s", "2", "--oracle-only"]);
    assert_eq!(code(&o), 0);

    assert_eq!(code(&run(&["rmt", "--ensemble", "laguerre", "--n", "2", "--s", "1"])), 2);
    assert_eq!(code(&run(&["rmt", "--ensemble", "laguerre", "--param", "-1.5", "--n", "2", "--s", "1"])), 2);
    assert_eq!(code(&run(&["rmt", "--ensemble", "hermite", "--n", "0", "--s", "1"])), 2);
}

#[test]
fn selftest_determinism_seed_env_and_out_file() {
    let a = run(&["selftest", "--suite", "apsum", "--trials", "50", "--seed", "7"]);
    let b = run(&["selftest", "--suite", "apsum", "--trials", "50", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("(seed 7, trials 50)"));

    let env = Command::new(env!("CARGO_BIN_EXE_shiftfact"))
        .args(["selftest", "--suite", "apsum", "--trials", "50"])
        .env("SHIFTFACT_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["selftest", "--suite", "rmtpdd", "--trials", "20", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"], serde_json::json!(["rmtpdd"]));

    assert_eq!(code(&run(&["selftest", "--suite", "nope"])), 2);
}
