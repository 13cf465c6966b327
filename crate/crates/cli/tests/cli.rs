use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bicirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicirc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_s5_passes_all_claims() {
    let o = bicirc(&["verify-s5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("3/3 claims pass"));
    let o = bicirc(&["verify-s5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 96);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn classify_octahedron() {
    let o = bicirc(&["classify-circulant", "6", "1,2,4,5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("(c)"), "{out}");
    assert!(out.contains("D = {0,3}"), "{out}");
    let bad = bicirc(&["classify-circulant", "6", "2,4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn coset_roundtrip_reports_isomorphism() {
    for name in ["petersen_complement", "petersen"] {
        let o = bicirc(&["coset-roundtrip", "--graph", name]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("isomorphic: true"));
    }
}

#[test]
fn small_census_is_deterministic() {
    let args = ["search", "--d", "6", "--max-order", "30", "--twice-odd"];
    let a = bicirc(&args);
    assert!(a.status.success());
    let out = stdout(&a);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2, "{out}");
    assert!(lines[1].starts_with("\"BC(5; 2; 0,1,2,3)\",10,"));
    assert_eq!(a.stdout, bicirc(&args).stdout);

    let j = bicirc(&["search", "--d", "6", "--max-order", "16", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    let orders: Vec<u64> = v["records"].as_array().unwrap().iter().map(|r| r["order"].as_u64().unwrap()).collect();
    assert!(orders.contains(&16), "{orders:?}");

    let g6 = bicirc(&["search", "--d", "6", "--max-order", "30", "--twice-odd", "--graph6"]);
    assert_eq!(stdout(&g6).lines().count(), 1);
}

#[test]
fn census_rejects_bad_jobs() {
    let o = bicirc(&["search", "--d", "6", "--max-order", "13"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd"));
}

#[test]
fn analyze_named_and_piped_graphs() {
    let o = bicirc(&["analyze", "--named", "K6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["aut_order"], "720");
    assert_eq!(v["primitive_case_ok"], true);

    let g6 = stdout(&bicirc(&["named", "petersen_complement"]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_bicirc"))
        .args(["analyze", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(g6.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["aut_order"], "120");
    assert_eq!(v["arc_transitive"], true);
    assert!(v["family_f"].as_str().unwrap().starts_with("witness"));

    let json = stdout(&bicirc(&["named", "GP(5,1)", "--format", "json"]));
    let dir = std::env::temp_dir().join(format!("bicirc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("prism.json");
    std::fs::write(&path, json).unwrap();
    let o = bicirc(&["analyze", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["edge_transitive"], false);

    let bad = dir.join("bad.g6");
    std::fs::write(&bad, "D?!").unwrap();
    let o = bicirc(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
}
