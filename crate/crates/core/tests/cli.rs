use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tangleduct::backends::DEFAULT_MAX_CLOSURE;
use tangleduct::generate::demo_family;
use tangleduct::io::parse_system;
use tangleduct::oracle::{enumerate, DEFAULT_CAP};
use tempfile::TempDir;

macro_rules! data {
    ($name:literal) => {
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/", $name)
    };
}

fn tangleduct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangleduct")).args(args).env_remove("TANGLEDUCT_MAX_CLOSURE").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = tangleduct(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn grid_end_to_end() {
    let dir = TempDir::new().unwrap();
    let sys = dir.path().join("grid_s2.json");
    let cert = dir.path().join("cert.json");
    ok(&["graph-sk", data!("grid3.txt"), "--k", "2", "-o", s(&sys)]);
    ok(&["strong", s(&sys), "--demo-family", "-o", s(&cert)]);
    let report = json(&ok(&["check-tree", s(&sys), s(&cert)]));
    assert_eq!(report["verified"], true);

    // the oracle agrees that the demo family has a tangle, and this is one
    let loaded = parse_system(&std::fs::read_to_string(&sys).unwrap(), DEFAULT_MAX_CLOSURE).unwrap();
    let f = demo_family(loaded.sets.as_ref().unwrap());
    let census = enumerate(&loaded.system, &f, DEFAULT_CAP).unwrap();
    let c = json(&std::fs::read_to_string(&cert).unwrap());
    assert_eq!(c["kind"], "tangle");
    let picks: Vec<u64> = serde_json::from_value(c["picks"].clone()).unwrap();
    let u = loaded.universe();
    assert!(census.f_tangles.iter().any(|o| u.ids(o.picks()) == picks));
}

#[test]
fn k2_family_gives_a_two_node_tree() {
    let out = json(&ok(&["strong", data!("one_sep.json"), "--family", data!("k2_family.json")]));
    assert_eq!(out["kind"], "stree");
    assert_eq!(out["nodes"].as_array().unwrap().len(), 2);
    let dot = ok(&["strong", data!("one_sep.json"), "--family", data!("k2_family.json"), "--format", "dot"]);
    assert!(dot.starts_with("graph stree"));
}

#[test]
fn one_separation_census_has_two_lines() {
    let out = ok(&["tangles", data!("one_sep.json"), "--jobs", "2"]);
    let lines: Vec<Value> = out.lines().map(json).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l["tangle"] == true));
}

#[test]
fn hypothesis_failures_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let sys = dir.path().join("grid_s2.json");
    ok(&["graph-sk", data!("grid3.txt"), "--k", "2", "-o", s(&sys)]);
    let out = tangleduct(&["strong", s(&sys)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("trivial separation"));

    // forbidding every ({v}, V - v) of a 3-set is not separable
    let bip = dir.path().join("bip.json");
    let seps: Vec<String> = (0..8u32)
        .map(|a| {
            let side = |m: u32| (0..3).filter(|i| m >> i & 1 == 1).map(|i| format!("\"{i}\"")).collect::<Vec<_>>().join(",");
            format!("{{\"A\": [{}], \"B\": [{}]}}", side(a), side(7 & !a))
        })
        .collect();
    std::fs::write(&bip, format!("{{\"V\": [\"0\",\"1\",\"2\"], \"separations\": [{}]}}", seps.join(","))).unwrap();
    let fam = dir.path().join("f.json");
    std::fs::write(&fam, r#"{"stars": [[{"A":["0"],"B":["1","2"]}], [{"A":["1"],"B":["0","2"]}], [{"A":["2"],"B":["0","1"]}]]}"#).unwrap();
    let out = tangleduct(&["strong", s(&bip), "--family", s(&fam), "--auto-standardize"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("separability"));
}

#[test]
fn malformed_input_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"elements\": [0], \"inverse\": {}, \"leq\": []}").unwrap();
    assert_eq!(tangleduct(&["validate", s(&bad)]).status.code(), Some(1));
    assert_eq!(tangleduct(&["graph-sk", data!("grid3.txt")]).status.code(), Some(1));
    assert_eq!(tangleduct(&["validate", "/nonexistent/system.json"]).status.code(), Some(1));
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = TempDir::new().unwrap();
    let cert = dir.path().join("cert.json");
    ok(&["strong", data!("one_sep.json"), "--family", data!("k2_family.json"), "-o", s(&cert)]);
    let mut c = json(&std::fs::read_to_string(&cert).unwrap());
    c["family"] = json(r#"{"stars": [[1]]}"#);
    std::fs::write(&cert, c.to_string()).unwrap();
    let out = tangleduct(&["check-tree", data!("one_sep.json"), s(&cert)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("over F"));
}

#[test]
fn essential_commands_chain() {
    let dir = TempDir::new().unwrap();
    let sys = dir.path().join("p3.json");
    let cert = dir.path().join("cert.json");
    let ess = dir.path().join("ess.json");
    ok(&["graph-sk", data!("path3.txt"), "--k", "2", "-o", s(&sys)]);
    let core = json(&ok(&["essential-core", s(&sys), "--demo-family"]));
    // cotrivial singletons have nothing to strip
    let demo = json(&ok(&["strong", s(&sys), "--demo-family"]));
    assert_eq!(core["stars"], demo["family"]["stars"]);
    ok(&["strong", s(&sys), "--demo-family", "-o", s(&cert)]);
    let c = json(&std::fs::read_to_string(&cert).unwrap());
    if c["kind"] == "stree" {
        ok(&["essentialize", s(&sys), s(&cert), "-o", s(&ess)]);
        let back = json(&ok(&["essentialize", s(&sys), s(&cert), "--expand"]));
        assert!(!back["nodes"].as_array().unwrap().is_empty());
    }
}

#[test]
fn outputs_are_byte_identical() {
    let args = ["strong", data!("one_sep.json"), "--family", data!("k2_family.json")];
    assert_eq!(ok(&args), ok(&args));
    let g = ["graph-sk", data!("grid3.txt"), "--k", "2"];
    assert_eq!(ok(&g), ok(&g));
}

#[test]
fn validate_reports_the_family() {
    let out = json(&ok(&["validate", data!("one_sep.json"), "--family", data!("k2_family.json")]));
    assert_eq!(out["family"]["standard"], true);
    let chain = json(&ok(&["validate", data!("chain.json")]));
    assert_eq!(chain["lattice"], false);
}
