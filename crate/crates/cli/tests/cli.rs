use std::process::{Command, Output};

fn confspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confspace")).args(args).output().expect("run confspace")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn build_summary() {
    let o = confspace(&["build", "--model", "arnold", "--n", "4", "--json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["hilbert_series"], serde_json::json!([1, 6, 11, 6]));
    let o = confspace(&["build", "--model", "punctured-plane", "--n", "2", "--k", "2", "--field", "gf2"]);
    assert!(stdout(&o).contains("hilbert series: [1, 5, 6]"));
    let o = confspace(&["build", "--model", "sphere-mod2", "--n", "4", "--json"]);
    assert_eq!(json(&o)["hilbert_series"], serde_json::json!([1, 3, 3, 3, 2]));
}

#[test]
fn dump_and_reload() {
    let o = confspace(&["build", "--model", "totaro", "--g", "1", "--n", "2", "--dump"]);
    assert!(o.status.success());
    let dir = std::env::temp_dir().join(format!("confspace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("torus2.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let o = confspace(&["build", "--presentation", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["hilbert_series"], serde_json::json!([1, 4, 5, 2]));
    let o = confspace(&["zcl", "--presentation", path.to_str().unwrap(), "--json"]);
    assert_eq!(json(&o)["value"], 4);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn zcl_reports() {
    let o = confspace(&["zcl", "--model", "so3-mod2", "--json"]);
    let v = json(&o);
    assert_eq!((v["quantity"].as_str(), v["value"].as_u64(), v["exact"].as_bool()), (Some("zcl"), Some(3), Some(true)));
    assert_eq!(v["method"], "power-iteration");
    let o = confspace(&["zcl", "--model", "totaro", "--g", "1", "--n", "3", "--method", "certificate", "--json"]);
    let v = json(&o);
    assert_eq!(v["value"], 6);
    assert_eq!(v["exact"], false);
    assert_eq!(v["factors"].as_array().unwrap().len(), 6);
    assert!(v["witness"].is_string());
    let o = confspace(&["zcl", "--model", "surface", "--g", "1", "--cap", "1", "--json"]);
    assert_eq!((json(&o)["value"].as_u64(), json(&o)["exact"].as_bool()), (Some(1), Some(false)));
}

#[test]
fn certificate_for_unsupported_model_fails() {
    let o = confspace(&["zcl", "--model", "arnold", "--n", "3", "--method", "certificate"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported"));
}

#[test]
fn groebner() {
    let o = confspace(&["groebner-check", "--model", "torus-ideal", "--n", "4", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["is_groebner"], true);
    assert!(v["spair_log"].as_array().unwrap().iter().all(|e| e["zero"] == true));
    let o = confspace(&["groebner-check", "--n", "2", "--order", "x_2<y_2<x_1<y_1"]);
    assert!(stdout(&o).contains("groebner basis: true"));
    let o = confspace(&["groebner-check", "--n", "2", "--order", "bogus"]);
    assert!(!o.status.success());
}

#[test]
fn tc_single_and_sweep() {
    let o = confspace(&["tc", "--g", "1", "--n", "2", "--m", "0", "--json"]);
    let v = json(&o);
    assert_eq!(v["status"], "tight");
    assert_eq!(v["lower"]["value"], 5);
    let o = confspace(&["tc", "--g", "0", "--n", "4", "--table"]);
    assert_eq!(stdout(&o).trim(), "0 4 0 6 6 6 tight");
    let o = confspace(&["tc", "--sweep", "1", "2", "2", "--json"]);
    assert!(o.status.success());
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2 * 2 * 3);
    for key in ["g", "n", "m", "lower", "upper", "theorem", "status"] {
        assert!(rows[0].get(key).is_some(), "{key}");
    }
}
