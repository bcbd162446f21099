#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn charpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charpoly"))
        .args(args)
        .output()
        .expect("spawn charpoly")
}

pub fn stdout(args: &[&str]) -> String {
    let out = charpoly(args);
    assert!(
        out.status.success(),
        "charpoly {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

pub fn golden_dir() -> PathBuf {
    std::env::var_os("CHARPOLY_GOLDEN_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden"))
}

pub fn golden(name: &str) -> String {
    let path = golden_dir().join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn schema(name: &str) -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn assert_valid(schema_name: &str, doc: &str) {
    let instance: serde_json::Value = serde_json::from_str(doc).expect("single JSON document");
    let compiled = jsonschema::JSONSchema::compile(&schema(schema_name)).unwrap();
    if let Err(errors) = compiled.validate(&instance) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{schema_name}: {msgs:?}\n{doc}");
    };
}
