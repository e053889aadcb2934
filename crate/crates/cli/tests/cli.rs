use std::fs;
use std::process::{Command, Output};

fn invcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_json_schema() {
    let o = invcount(&["count", "--patterns", "132,213", "--max-k", "4", "--method", "all", "--stable"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let at = |key: &str| text.find(&format!("\n  \"{key}\":")).unwrap();
    let order = ["patterns", "method", "terms", "mismatches", "elapsed_ms"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["patterns"], serde_json::json!(["132", "213"]));
    let values: Vec<&str> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "1", "2", "3", "3"]);
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn stable_reports_are_byte_identical() {
    let args = ["count", "--patterns", "321", "--max-k", "9", "--stable"];
    assert_eq!(invcount(&args).stdout, invcount(&args).stdout);
}

#[test]
fn count_csv_and_plain() {
    let o = invcount(&["count", "--patterns", "321", "--max-k", "4", "--method", "fast", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,value\n0,1\n1,1\n2,2\n3,4\n4,9\n");
    let o = invcount(&["count", "--patterns", "132", "--max-k", "2", "--method", "fast", "--format", "plain"]);
    assert!(stdout(&o).contains("\n2 2\n"));
}

#[test]
fn big_values_stay_exact() {
    let o = invcount(&["count", "--patterns", "132", "--max-k", "200", "--method", "fast", "--format", "csv"]);
    assert!(stdout(&o).ends_with("200,3972999029388\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(invcount(&["count", "--patterns", "13x", "--max-k", "3"]).status.code(), Some(2));
    assert_eq!(invcount(&["count", "--max-k", "3"]).status.code(), Some(2));
    assert_eq!(invcount(&["count", "--patterns", "123,321", "--max-k", "3", "--method", "gf"]).status.code(), Some(2));
    assert_eq!(invcount(&["count", "--patterns", "132", "--max-k", "40", "--method", "oracle"]).status.code(), Some(3));
    let missing = std::env::temp_dir().join("invcount-no-fixtures");
    let o = invcount(&["oeis", "--id", "A000041", "--fixtures", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn unknown_pattern_set_warns_and_uses_oracle() {
    let o = invcount(&["count", "--patterns", "1234", "--max-k", "3", "--method", "fast"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn enumerate_lists_avoiders() {
    let o = invcount(&["enumerate", "--patterns", "123", "--k", "4"]);
    assert_eq!(stdout(&o), "2431\n3241\n3412\n4132\n4213\n");
    let o = invcount(&["enumerate", "--patterns", "132", "--k", "3", "--decomposable"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_with_known_open_items() {
    let o = invcount(&["verify", "--max-k", "8", "--stable"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let open: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "known-open")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(open.contains(&"i123-printed-recurrence"));
    assert_eq!(invcount(&["verify", "--max-k", "0"]).status.code(), Some(0));
}

#[test]
fn oeis_offline_checks() {
    let o = invcount(&["oeis", "--patterns", "231", "--max-k", "12", "--offline", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# A005169 offset +0 compared 13 match"));
    let o = invcount(&["oeis", "--id", "A135278", "--max-k", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["offset"], 1);
}

#[test]
fn oeis_mismatch_exits_one() {
    let dir = std::env::temp_dir().join(format!("invcount-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    fs::write(dir.join("b000041.txt"), "0 1\n1 1\n2 2\n3 4\n").unwrap();
    let o = invcount(&["oeis", "--id", "A000041", "--max-k", "5", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn biject_checks() {
    let o = invcount(&["biject", "--which", "coin-removal", "--max-size", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("size  6: domain   46, image   46, expected   46  ok"));
    let o = invcount(&["biject", "--which", "table-partition", "--max-size", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 21);
    let o = invcount(&["biject", "--which", "coin-removal", "--max-size", "3", "--trace"]);
    assert!(stdout(&o).contains("0 1 red up\n1 1 black down\n"));
    assert_eq!(invcount(&["biject", "--which", "coin-removal", "--max-size", "11"]).status.code(), Some(3));
}
