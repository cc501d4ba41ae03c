use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rdrd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdrd"))
        .args(args)
        .output()
        .unwrap()
}

fn rdrd_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rdrd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph(family: &[&str]) -> String {
    let mut args = vec!["construct"];
    args.extend_from_slice(family);
    let o = rdrd(&args);
    assert!(o.status.success());
    stdout(&o).lines().last().unwrap().to_string()
}

#[test]
fn construct_prints_provenance_then_graph6() {
    let o = rdrd(&["construct", "omega", "o2", "Cl", "0,1"]);
    assert_eq!(
        stdout(&o),
        "# family=omega variant=o2 h=Cl targets=0,1\nFl~uO\n"
    );
    let o = rdrd(&["construct", "random_tree", "9", "--seed", "4"]);
    let text = stdout(&o);
    assert!(text.starts_with("# family=random_tree n=9 seed=4\n"));
    assert_eq!(
        text,
        stdout(&rdrd(&["construct", "random_tree", "9", "--seed", "4"]))
    );
}

#[test]
fn construct_rejects_bad_families() {
    assert_eq!(rdrd(&["construct", "nonsense"]).status.code(), Some(2));
    assert_eq!(rdrd(&["construct", "star"]).status.code(), Some(2));
    assert_eq!(
        rdrd(&["construct", "omega", "o2", "Cl", "0,2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn params_on_heawood() {
    let h = graph(&["heawood"]);
    let o = rdrd(&["params", &h]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("gamma_r=4\n"));
    assert!(text.contains("gamma_rdR=11\n"));
}

#[test]
fn verify_labelings() {
    let p4 = graph(&["path", "4"]);
    let o = rdrd(&["verify", &p4, "--values", "1,2,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid RDRD, weight 6\n");
    let o = rdrd(&["verify", &p4, "--values", "3,0,0,3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = rdrd(&["verify", &p4, "--values", "0,3,0,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid RDRD: vertex 0"));
    let o = rdrd_stdin(
        &["verify", &p4, "--labeling", "-"],
        "# P4\n0 1\n1 2\n2 2\n3 1\n",
    );
    assert_eq!(stdout(&o), "valid RDRD, weight 6\n");
    let o = rdrd(&["verify", &p4, "--param", "dom", "--values", "1,2"]);
    assert_eq!(stdout(&o), "valid dominating set, weight 2\n");
    let o = rdrd(&["verify", &p4, "--values", "1,2,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        rdrd(&["verify", &p4, "--values", "1,9,2,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn solve_text_and_json() {
    let c5 = graph(&["cycle", "5"]);
    let o = rdrd(&["solve", &c5]);
    let text = stdout(&o);
    assert!(text.starts_with("value=7\n"));
    assert_eq!(text.lines().count(), 6);
    let o = rdrd(&["solve", &c5, "--param", "dom", "--json"]);
    let rec: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["value"], 2);
    assert_eq!(rec["param"], "dom");
    let p7 = graph(&["path", "7"]);
    let o = rdrd(&["solve", &p7, "--engine", "tree", "--json"]);
    let rec: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (rec["value"].as_u64(), rec["engine"].as_str()),
        (Some(9), Some("tree"))
    );
    assert_eq!(
        rdrd(&["solve", &c5, "--engine", "tree"]).status.code(),
        Some(2)
    );
}

#[test]
fn solve_all_optima() {
    let k3 = graph(&["complete", "3"]);
    let o = rdrd(&["solve", &k3, "--all"]);
    assert_eq!(stdout(&o), "value=3\noptima=3\n0 0 3\n0 3 0\n3 0 0\n");
}

#[test]
fn budget_exhaustion_is_reported() {
    let c = graph(&["cycle", "12"]);
    let o = rdrd(&["solve", &c, "--engine", "bb", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    let o = Command::new(env!("CARGO_BIN_EXE_rdrd"))
        .args(["solve", &c, "--engine", "bb"])
        .env("RDRD_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn batch_input_from_file_and_stdin() {
    let dir = std::env::temp_dir().join(format!("rdrd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("graphs.g6");
    std::fs::write(
        &file,
        format!(
            "# corpus\n{}\n\n{}\n",
            graph(&["path", "3"]),
            graph(&["cycle", "4"])
        ),
    )
    .unwrap();
    let o = rdrd(&["solve", "--file", file.to_str().unwrap(), "--json"]);
    let values: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["value"]
                .as_u64()
                .unwrap()
        })
        .collect();
    assert_eq!(values, [4, 6]);
    let o = rdrd_stdin(&["classify", "-"], "Bg\nCl\n");
    assert_eq!(
        stdout(&o),
        "# Bg\nRDRD_4_THETA p3_center=[1]\nTREE_STAR center=[1]\n# Cl\nOTHER\n"
    );
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn bounds_json_records() {
    let o = rdrd(&["bounds", &graph(&["petersen"]), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 9);
    let reg = recs
        .iter()
        .find(|r| r["bound"] == "regular_girth6")
        .unwrap();
    assert_eq!(reg["applicable"], false);
    assert_eq!(reg["precondition_failed"], "girth 5 < 6");
}

/// Golden output: the JSON schemas are part of the interface.
#[test]
fn golden_json_schemas() {
    let o = rdrd(&["bounds", "Bg", "--json"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(
        first,
        r#"{"applicable":true,"bound":"rest_lower","graph6":"Bg","holds":true,"lhs":"3","precondition_failed":null,"rhs":"4","statement":"gamma_rdR >= (2n + (Delta - 2) gamma_r) / Delta"}"#
    );
    let o = rdrd(&["params", "Bg", "--json"]);
    assert_eq!(
        stdout(&o),
        "{\"gamma\":1,\"gamma_2\":2,\"gamma_R\":2,\"gamma_dR\":3,\"gamma_r\":3,\"gamma_r2\":3,\"gamma_rR\":3,\"gamma_rdR\":4,\"graph6\":\"Bg\"}\n"
    );
    let o = rdrd(&["classify", "Cs", "--json"]);
    assert_eq!(
        stdout(&o),
        "{\"evidence\":{\"center\":[0]},\"graph6\":\"Cs\",\"kind\":\"small\",\"tag\":\"RDRD_5_K13\"}\n\
         {\"evidence\":{\"center\":[0]},\"graph6\":\"Cs\",\"kind\":\"tree\",\"tag\":\"TREE_STAR\"}\n"
    );
    let o = rdrd(&["fuzz", "--count", "3", "--n-max", "4", "--json"]);
    assert_eq!(
        stdout(&o),
        "{\"checks_run\":15,\"counterexamples\":0,\"instances\":3,\"summary\":true}\n"
    );
}

#[test]
fn fuzz_tree_oracle() {
    let o = rdrd(&[
        "fuzz", "--mode", "trees", "--n-max", "12", "--count", "500", "--seed", "1", "--checks",
        "oracle",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 counterexamples"));
}

#[test]
fn fuzz_output_ignores_worker_count() {
    let args = ["fuzz", "--count", "40", "--n-max", "7", "--seed", "9"];
    let one = rdrd(&[&args[..], &["--jobs", "1"]].concat());
    let four = rdrd(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn fuzz_rejects_configs_beyond_ceilings() {
    let o = rdrd(&["fuzz", "--n-max", "9", "--checks", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(rdrd(&["fuzz", "--mode", "cubes"]).status.code(), Some(2));
}

#[test]
fn classify_disconnected_is_an_input_error() {
    let o = rdrd(&["classify", "A?"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(rdrd(&["frobnicate"]).status.code(), Some(2));
}
