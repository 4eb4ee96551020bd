use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use scs_cli::input::read_instance;
use scs_cli::sidecar_path;
use scs_core::words;
use serde_json::Value;

fn scs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scs")).args(args).output().expect("spawn scs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn check_sidecar_round_trip(args: &[&str], family: &str) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("inst.txt");
    let o = scs(&[args, &["-o", out.to_str().unwrap()]].concat());
    assert!(o.status.success(), "{}", stderr(&o));

    let raw = read_instance(&out).unwrap();
    let side = read_json(&sidecar_path(&out));
    assert_eq!(side["family"], family);
    let strings: Vec<String> = raw.iter().map(|s| String::from_utf8(s.clone()).unwrap()).collect();
    let listed: Vec<String> = serde_json::from_value(side["strings"].clone()).unwrap();
    assert_eq!(strings, listed);
    let edges = side["edges"].as_array().unwrap();
    assert!(!edges.is_empty());
    let mut total = 0;
    for e in edges {
        let (from, to) = (e["from"].as_u64().unwrap() as usize, e["to"].as_u64().unwrap() as usize);
        let got = words::overlap_len(&raw[from], &raw[to]) as i64;
        assert_eq!(got, e["overlap"].as_i64().unwrap(), "{family} edge {from}->{to}");
        total += got;
    }
    if let Some(t) = side.get("predicted_total") {
        assert_eq!(total, t.as_i64().unwrap());
    }
}

#[test]
fn gen_tight2_round_trip() {
    for k in ["1", "2", "7"] {
        check_sidecar_round_trip(&["gen", "--family", "tight2", "-k", k], "tight2");
    }
}

#[test]
fn gen_tight3_round_trip() {
    for n in ["1", "3", "8"] {
        check_sidecar_round_trip(&["gen", "--family", "tight3", "-k", n], "tight3");
    }
}

#[test]
fn gen_greedy_round_trip() {
    for n in ["4", "6", "15"] {
        check_sidecar_round_trip(&["gen", "--family", "greedy", "-n", n], "greedy");
    }
}

#[test]
fn gen_tight2_sidecar_values() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.txt");
    assert!(scs(&["gen", "--family", "tight2", "-k", "1", "-o", out.to_str().unwrap()]).status.success());
    let side = read_json(&sidecar_path(&out));
    assert_eq!(side["periods"], serde_json::json!([8, 5]));
    assert_eq!(side["gap"], 17);
    assert_eq!(side["edges"][0]["overlap"], 9);
    assert_eq!(side["edges"][1]["overlap"], 7);
}

#[test]
fn gen_random_is_seeded() {
    let a = scs(&["gen", "--family", "random", "-n", "12", "--seed", "9"]);
    let b = scs(&["gen", "--family", "random", "-n", "12", "--seed", "9"]);
    let c = scs(&["gen", "--family", "random", "-n", "12", "--seed", "10"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(stdout(&a).lines().count(), 12);
}

#[test]
fn solve_prints_valid_superstring() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "chain.txt", "# chain\nabc\nbcd\n\ncde\n");
    for algo in ["combined", "s1", "s2", "greedy", "exact"] {
        let o = scs(&["solve", &input, "--algo", algo]);
        assert!(o.status.success(), "{algo}: {}", stderr(&o));
        let text = stdout(&o);
        let sup = text.lines().next().unwrap();
        for s in ["abc", "bcd", "cde"] {
            assert!(sup.contains(s), "{algo} output {sup}");
        }
        assert!(text.contains(&format!("length={}", sup.len())));
    }
    let exact = scs(&["solve", &input, "--algo", "exact"]);
    assert_eq!(stdout(&exact).lines().next(), Some("abcde"));
}

#[test]
fn solve_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p.txt", "ab\nba\n");
    let json = dir.path().join("r.json");
    let o = scs(&["solve", &input, "--json", json.to_str().unwrap()]);
    assert!(o.status.success());
    let r = read_json(&json);
    assert_eq!(r["instance"]["n"], 2);
    assert_eq!(r["results"][0]["length"], 3);
    assert!(r["timestamp"].is_string());
    assert!(r["results"][0]["ms"].is_number());
}

#[test]
fn single_survivor_warns() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "s.txt", "abc\nab\nbc\nabc\n");
    let o = scs(&["solve", &input]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("abc"));
    assert!(stderr(&o).to_lowercase().contains("warn"), "{}", stderr(&o));
}

#[test]
fn compare_lists_every_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "chain.txt", "abc\nbcd\ncde\n");
    let json = dir.path().join("c.json");
    let o = scs(&["compare", &input, "--json", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = read_json(&json);
    let algos: Vec<&str> = r["results"].as_array().unwrap().iter().map(|row| row["algo"].as_str().unwrap()).collect();
    assert_eq!(algos, ["combined", "s1", "s2", "greedy", "exact"]);
    let exact = r["results"].as_array().unwrap().iter().find(|row| row["algo"] == "exact").unwrap();
    assert_eq!(exact["length"], 5);
    assert_eq!(exact["ratio"], 1.0);
}

#[test]
fn empty_or_missing_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "e.txt", "# nothing\n\n");
    assert_eq!(scs(&["solve", &empty]).status.code(), Some(1));
    let missing = dir.path().join("missing.txt");
    assert_eq!(scs(&["solve", missing.to_str().unwrap()]).status.code(), Some(1));
    let bad = write(dir.path(), "b.txt", "ab cd\n");
    assert_eq!(scs(&["solve", &bad]).status.code(), Some(1));
}

#[test]
fn exact_limit_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "chain.txt", "abc\nbcd\ncde\ndef\n");
    let o = scs(&["solve", &input, "--algo", "exact", "--exact-limit", "3"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    let o = scs(&["solve", &input, "--algo", "greedy", "--exact-limit", "3"]);
    assert!(o.status.success());
}

#[test]
fn bad_generator_parameter_exits_1() {
    assert_eq!(scs(&["gen", "--family", "tight2", "-k", "0"]).status.code(), Some(1));
    assert_eq!(scs(&["gen", "--family", "greedy", "-n", "2"]).status.code(), Some(1));
}

#[test]
fn verify_json_shape() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("v.json");
    let o = scs(&["verify", "--suite", "all", "--trials", "200", "--seed", "4", "--max-param", "8", "--json", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = read_json(&json);
    assert_eq!(r["seed"], 4);
    let v = &r["verification"];
    assert_eq!(v["failed"], 0);
    assert!(v["run"].as_u64().unwrap() > 0);
    let suites: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["pairs", "cycles", "instances", "tight"]);
    assert!(v.get("reports").is_none());
}

#[test]
fn verify_full_lists_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("v.json");
    let o = scs(&["verify", "--suite", "tight", "--max-param", "2", "--full", "--json", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = read_json(&json);
    let reports = r["verification"]["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert_eq!(reports[0]["suite"], "tight");
    let first = &reports[0]["report"];
    for key in ["lemma_id", "inputs", "lhs", "rhs", "strict", "holds"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert!(first["lhs"].as_str().unwrap().contains('/') || first["lhs"].as_str().unwrap().parse::<i64>().is_ok());
}
