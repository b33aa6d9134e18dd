use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn hamquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamquot")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn export(dir: &TempDir, name: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let o = hamquot(&["gallery", "export", name, path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gallery_list_names_every_example() {
    let o = hamquot(&["gallery", "list"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for name in ["gr2c4", "flag-su3", "so5-orbit", "s2xs2-diag", "cp2-s1", "sigma-g-x-s2", "blowup-g", "s2cubed", "cp5-t3"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn gallery_show_and_unknown_names() {
    let o = hamquot(&["gallery", "show", "s2cubed"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("[-2, 2] x [-1, 1]"));
    assert!(text.contains("8 fixed components"));
    assert_eq!(code(&hamquot(&["gallery", "show", "nope"])), 2);
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("x.json");
    assert_eq!(code(&hamquot(&["gallery", "export", "nope", p(&target)])), 2);
}

#[test]
fn export_is_deterministic_and_classifies() {
    let dir = TempDir::new().unwrap();
    let a = export(&dir, "gr2c4");
    let first = std::fs::read(&a).unwrap();
    let b = export(&dir, "gr2c4");
    assert_eq!(first, std::fs::read(b).unwrap());

    let o = hamquot(&["classify", p(&a), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["verdict"]["display"], "Sphere(5)");
    assert_eq!(doc["validation"]["passed"], true);
    assert_eq!(stdout(&o), stdout(&hamquot(&["classify", p(&a), "--format", "json"])));
}

#[test]
fn collapsed_product_lists_two_facets() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "s2cubed");
    let doc = json(&hamquot(&["classify", p(&path), "--format", "json"]));
    assert_eq!(doc["verdict"]["kind"], "CollapsedProduct");
    let faces = doc["verdict"]["short_faces"].as_array().unwrap();
    assert_eq!(faces.len(), 2);
    for f in faces {
        let face = &doc["stratification"]["faces"][f.as_u64().unwrap() as usize];
        assert_eq!(face["dim"], 1);
        assert_eq!(face["complexity"], 0);
    }
}

#[test]
fn missing_vertex_component_fails_validation() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "s2cubed");
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["fixed_components"].as_array_mut().unwrap().retain(|c| c["moment"] != serde_json::json!(["2", "1"]));
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = hamquot(&["classify", p(&path), "--format", "json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["check"], "V2-vertex-coverage");
    assert_eq!(code(&hamquot(&["classify", p(&path)])), 1);
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"name\": 3}").unwrap();
    assert_eq!(code(&hamquot(&["classify", p(&path)])), 2);
    assert_eq!(code(&hamquot(&["classify", p(&dir.path().join("missing.json"))])), 2);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let gr = export(&dir, "gr2c4");
    let o = hamquot(&["verify", p(&gr), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let checks = doc["verification"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        assert_eq!(c["computed"]["betti"], serde_json::json!([1, 0, 0, 0, 0, 1]));
    }

    let cp2 = export(&dir, "cp2-s1");
    let o = hamquot(&["verify", p(&cp2), "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verification"]["checks"][0]["computed"]["betti"], serde_json::json!([1]));

    let cp5 = export(&dir, "cp5-t3");
    let o = hamquot(&["verify", p(&cp5)]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("StratificationOnly: complexity 2"));

    let o = hamquot(&["verify", p(&gr), "--max-simplices", "100"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("estimated"));
}

#[test]
fn skip_validation_still_classifies() {
    let dir = TempDir::new().unwrap();
    let path = export(&dir, "cp2-s1");
    let doc = json(&hamquot(&["classify", p(&path), "--format", "json", "--skip-validation"]));
    assert_eq!(doc["verdict"]["display"], "Disk(3)");
    assert!(doc["validation"].is_null());
}
