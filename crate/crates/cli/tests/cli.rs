use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn rdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdom")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

/// Loads a schema with sibling-file `$ref`s inlined.
fn load_schema(name: &str) -> Value {
    fn inline(v: &mut Value) {
        match v {
            Value::Object(map) => {
                if let Some(Value::String(r)) = map.get("$ref") {
                    *v = load_schema(&r.clone());
                    return;
                }
                map.values_mut().for_each(inline);
            }
            Value::Array(items) => items.iter_mut().for_each(inline),
            _ => {}
        }
    }
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    inline(&mut v);
    if let Value::Object(map) = &mut v {
        map.remove("$schema");
    }
    v
}

fn assert_schema(name: &str, value: &Value) {
    let schema = load_schema(name);
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{value:#}");
}

fn write(dir: &Path, name: &str, o: &Output) -> String {
    assert_eq!(code(o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let path = dir.join(name);
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_prism_t4() {
    let o = rdom(&["solve", "--petersen", "6,1", "--t", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("8"));
    assert!(!stdout(&o).contains("elapsed"));
    let v = rdom(&["solve", "--petersen", "6,1", "--t", "4", "--verbose"]);
    assert!(stdout(&v).contains("elapsed"));
}

#[test]
fn solve_methods_agree() {
    for method in ["auto", "bb", "dp"] {
        let o = rdom(&["solve", "--petersen", "7,2", "--t", "3", "--method", method, "--json"]);
        assert_eq!(code(&o), 0);
        let v = json(&o);
        assert_schema("solve.schema.json", &v);
        assert_eq!(v["optimum"], json(&rdom(&["solve", "--petersen", "7,2", "--t", "3", "--json"]))["optimum"]);
    }
}

#[test]
fn solve_on_graph_file_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", &rdom(&["gen", "subdivided-k4"]));
    let w = dir.path().join("w.json");
    let o = rdom(&["solve", "--graph", &g, "--t", "2", "--witness-out", w.to_str().unwrap(), "--json", "--verbose"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_schema("solve.schema.json", &v);
    assert_eq!(v["method"], "branch_bound");
    let check = rdom(&["verify", "--graph", &g, "--assignment", w.to_str().unwrap()]);
    assert_eq!(code(&check), 0);
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = rdom(&["solve", "--petersen", "9,2", "--t", "3", "--method", "bb", "--budget-nodes", "50", "--json"]);
    assert_eq!(code(&o), 3);
    let v = json(&o);
    assert_schema("solve.schema.json", &v);
    assert_eq!(v["status"], "budget_exhausted");
    let refused = rdom(&["solve", "--petersen", "30,5", "--t", "5", "--budget-states", "1000"]);
    assert_eq!(code(&refused), 3);
}

#[test]
fn gen_rejects_non_cubic_parameters() {
    assert_eq!(code(&rdom(&["gen", "petersen", "--n", "6", "--k", "3"])), 2);
    let o = rdom(&["gen", "petersen", "--n", "5", "--k", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_schema("graph.schema.json", &v);
    assert_eq!(v["n_vertices"], 10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);
    let dot = stdout(&rdom(&["gen", "petersen", "--n", "5", "--k", "2", "--dot"]));
    assert!(dot.starts_with("graph"));
}

#[test]
fn example_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", &rdom(&["gen", "example"]));
    let a = write(dir.path(), "a.json", &rdom(&["construct", "example"]));
    assert_schema("assignment.schema.json", &serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap());
    let o = rdom(&["verify", "--graph", &g, "--assignment", &a, "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_schema("verify.schema.json", &v);
    assert_eq!(v["weight"], 24);
    assert_eq!(v["certificate"]["certificate"], "exact");
    assert_eq!(v["certificate"]["lower_bound"], 24);
}

#[test]
fn verify_failure_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    std::fs::write(&a, r#"{"t":2,"colors":[[1],[],[],[],[],[],[],[],[],[]]}"#).unwrap();
    let o = rdom(&["verify", "--petersen", "5,2", "--assignment", a.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_schema("verify.schema.json", &v);
    assert_eq!(v["result"]["verdict"], "fail");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    std::fs::write(&a, "{not json").unwrap();
    let o = rdom(&["verify", "--petersen", "5,2", "--assignment", a.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse"));
    assert_eq!(code(&rdom(&["verify", "--petersen", "5", "--assignment", "x"])), 2);
    assert_eq!(code(&rdom(&["solve", "--t", "2"])), 2);
}

#[test]
fn bounds_example() {
    let o = rdom(&["bounds", "--c", "6", "--k", "2", "--t", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_schema("bound_report.schema.json", &v);
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(13), Some(15)));
    let printed = json(&rdom(&["bounds", "--c", "3", "--k", "2", "--t", "5", "--mode", "as-printed", "--json"]));
    assert_eq!(printed["upper"], 14);
    let discrepancy = json(&rdom(&["bounds", "--c", "5", "--k", "2", "--t", "2", "--json"]));
    assert_schema("bound_report.schema.json", &discrepancy);
    assert!(discrepancy["discrepancy"].is_object());
    assert_eq!(code(&rdom(&["bounds", "--c", "2", "--k", "1", "--t", "3"])), 2);
}

#[test]
fn table_csv() {
    let o = rdom(&["table", "--c", "3..4", "--k", "1,2", "--t", "1..3", "--solve-within-budget"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("c,k,n,t,lower,upper,exact,solver_value,method,sources,mode"));
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    assert_eq!(rows.len(), 12);
    let keys: Vec<(u64, u64, u64)> = rows
        .iter()
        .map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap(), r[3].parse().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in &rows {
        let (lower, upper, value): (u64, u64, u64) = (r[4].parse().unwrap(), r[5].parse().unwrap(), r[7].parse().unwrap());
        assert!(lower <= value && value <= upper, "{r:?}");
    }
    assert_eq!(code(&rdom(&["table", "--c", "1..2", "--k", "1", "--t", "1"])), 2);
}

#[test]
fn check_structure_profiles() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", &rdom(&["gen", "petersen", "--n", "12", "--k", "1"]));
    let a = write(dir.path(), "a.json", &rdom(&["construct", "pattern", "--n", "12", "--k", "1", "--t", "3"]));
    let o = rdom(&["check-structure", "--graph", &g, "--assignment", &a, "--t", "3", "--profile", "outer"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_schema("audit_report.schema.json", &v);
    assert_eq!(v["overall"], true);

    let sol = dir.path().join("s.json");
    let s = sol.to_str().unwrap();
    assert_eq!(code(&rdom(&["solve", "--petersen", "6,1", "--t", "4", "--witness-out", s])), 0);
    let o = rdom(&["check-structure", "--petersen", "6,1", "--assignment", s, "--profile", "extremal4"]);
    assert_eq!(code(&o), 0);
    assert_schema("audit_report.schema.json", &json(&o));
    let census = rdom(&["check-structure", "--petersen", "6,1", "--assignment", s, "--profile", "census"]);
    assert_eq!(code(&census), 0);

    // t mismatch and contract violations
    assert_eq!(code(&rdom(&["check-structure", "--petersen", "6,1", "--assignment", s, "--t", "5", "--profile", "census"])), 2);
    assert_eq!(code(&rdom(&["check-structure", "--petersen", "6,1", "--assignment", s, "--profile", "extremal5"])), 1);
}

#[test]
fn construct_pattern_with_partition_and_lift() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        &rdom(&["construct", "pattern", "--n", "6", "--k", "1", "--t", "4", "--partition", "1,2|3|4"]),
    );
    assert_eq!(code(&rdom(&["verify", "--petersen", "6,1", "--assignment", &a])), 0);
    let lifted = rdom(&["construct", "lift", "--petersen", "6,1", "--assignment", &a]);
    assert_eq!(code(&lifted), 0);
    let v = json(&lifted);
    assert_schema("assignment.schema.json", &v);
    assert_eq!(v["t"], 5);
    let bad = rdom(&["construct", "pattern", "--n", "6", "--k", "1", "--t", "4", "--partition", "1|2|3"]);
    assert_eq!(code(&bad), 2);
    assert_eq!(code(&rdom(&["construct", "pattern", "--n", "7", "--k", "1", "--t", "3"])), 2);
}

#[test]
fn help_documents_vertex_ids() {
    let text = stdout(&rdom(&["--help"]));
    assert!(text.contains("u_i = i, v_i = n + i"));
}
