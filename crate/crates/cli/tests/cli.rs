use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn jslope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jslope")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn classify_fig1_is_near_alternating() {
    let o = jslope(&["classify", &data("fig1.json")]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["near_alternating"]["ratio"], "7/3");
    assert_eq!(v["near_alternating"]["near_alternating"], true);
}

#[test]
fn cjones_unknot_three() {
    let o = jslope(&["cjones", &data("unknot.pd"), "-n", "3"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["poly_text"], "v^4 + 1 + v^-4");
    assert_eq!(v["invariant"], "cjones");
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn verify_fig1_degree_exits_zero() {
    let o = jslope(&["verify", &data("fig1.json"), "--theorem", "degree", "--n-range", "2..3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout_json(&o)["all_pass"], true);
}

#[test]
fn bad_input_reports_json_error() {
    let dir = std::env::temp_dir().join(format!("jslope-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.pd");
    std::fs::write(&bad, "Xp[1,5,2,4]\nXp[3,1,4,6]\n").unwrap();
    let o = jslope(&["bracket", bad.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(o.stdout.is_empty());
    let err: Value = serde_json::from_slice(&o.stderr).expect("stderr is JSON");
    assert!(err["error"].is_string());
    assert!(err["message"].is_string());

    let o = jslope(&["cjones", &data("unknot.pd"), "-n", "1"]);
    assert!(!o.status.success());
    let o = jslope(&["classify", &data("trefoil.pd")]);
    assert!(!o.status.success());
}

#[test]
fn output_is_deterministic_and_thread_independent() {
    let a = jslope(&["bracket", &data("fig1.json"), "--threads", "1"]);
    let b = jslope(&["bracket", &data("fig1.json"), "--threads", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("jslope-out-{}.json", std::process::id()));
    let o = jslope(&["graph2link", &data("fig1.json"), "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["crossings"], 23);
    assert_eq!(v["c_plus"].as_u64().unwrap() + v["c_minus"].as_u64().unwrap(), 23);
    std::fs::remove_file(path).ok();
}

#[test]
fn orient_flag_changes_writhe_of_two_component_link() {
    // P(-2,7,7,7) with an even number of odd columns is a 2-component link
    let pd = jslope(&["graph2link", &data("fig1.json")]);
    let v = stdout_json(&pd);
    if v["components"] == 2 {
        let flipped = stdout_json(&jslope(&["graph2link", &data("fig1.json"), "--orient", "1:-"]));
        assert_ne!(v["writhe"], flipped["writhe"]);
    }
    let o = jslope(&["graph2link", &data("fig1.json"), "--orient", "9:-"]);
    assert!(!o.status.success());
}

#[test]
fn twist_finds_full_twists_on_two_region_graph() {
    let v = stdout_json(&jslope(&["twist", &data("two_regions.json")]));
    assert_eq!(v["full_twists"]["m"], 3);
}

#[test]
fn volume_reports_constants() {
    let v = stdout_json(&jslope(&["volume", &data("pretzel_-8_26_26_26.json")]));
    let reports = v["reports"].as_array().unwrap();
    let fkp = reports.iter().find(|r| r["variant"] == "fkp_twist").unwrap();
    assert_eq!(fkp["lower"]["decimal"], "2.12205");
    assert_eq!(fkp["upper"]["decimal"], "30.44700");
}

#[test]
fn add_full_twists_needs_graph() {
    let o = jslope(&["bracket", &data("trefoil.pd"), "--add-full-twists", "1"]);
    assert!(!o.status.success());
}

#[test]
fn lambda_reports_adequacy_obstruction() {
    let v = stdout_json(&jslope(&["lambda", &data("fig1.json"), "--max-crossings", "23"]));
    assert_eq!(v["z_degree"], 21);
    assert_eq!(v["obstruction"]["obstructed"], true);
    let o = jslope(&["lambda", &data("fig1.json")]);
    assert!(!o.status.success());
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "capacity");
}
