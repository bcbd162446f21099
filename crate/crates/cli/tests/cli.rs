mod common;

use common::{assert_valid, charpoly, golden, stdout};

#[test]
fn table_matches_golden_files() {
    let args = [
        "table", "--lambda", "3,3", "--r-list", "2,3,4,5", "--format",
    ];
    for (format, file) in [
        ("text", "table-3-3.txt"),
        ("json", "table-3-3.json"),
        ("latex", "table-3-3.tex"),
    ] {
        let mut a = args.to_vec();
        a.push(format);
        assert_eq!(stdout(&a), golden(file), "format {format}");
    }
}

#[test]
fn primaries_match_golden_files() {
    for (format, file) in [
        ("text", "primaries-r3.txt"),
        ("json", "primaries-r3.json"),
        ("latex", "primaries-r3.tex"),
    ] {
        let out = stdout(&["primaries", "--r", "3", "--max-h", "8", "--format", format]);
        assert_eq!(out, golden(file), "format {format}");
    }
}

#[test]
fn expand_json() {
    let out = stdout(&["expand", "--lambda", "3,3", "--r", "2", "--format", "json"]);
    assert_eq!(
        out,
        "{\"lambda\":[3,3],\"r\":2,\"k\":6,\"shift\":2,\"b\":[5,5,3,1,0,0,0]}\n"
    );
    assert_valid("expansion.schema.json", &out);
}

#[test]
fn expand_empty_partition_is_one() {
    let out = stdout(&["expand", "--lambda", "", "--r", "3"]);
    assert!(out.contains("= 1C(n-3,0)"), "{out}");
    assert!(out.contains("b = [1]"), "{out}");
}

#[test]
fn expand_r1_text() {
    let out = stdout(&["expand", "--lambda", "3,3", "--r", "1", "--format", "text"]);
    assert!(out.contains("5C(n-1,6) -3C(n-1,4) +2C(n-1,3)"), "{out}");
}

#[test]
fn expand_latex_is_one_display() {
    let out = stdout(&["expand", "--lambda", "3,3", "--r", "3", "--format", "latex"]);
    assert!(out.starts_with("\\begin{alignat*}"));
    assert!(out.trim_end().ends_with("\\end{alignat*}"));
}

#[test]
fn primaries_examples() {
    let out = stdout(&["primaries", "--r", "3", "--max-h", "4", "--format", "json"]);
    assert_valid("primaries.schema.json", &out);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let parts: Vec<String> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["partition"].to_string())
        .collect();
    assert_eq!(
        parts,
        ["[]", "[1]", "[1,1]", "[3]", "[2,1]", "[2,2]", "[4]"]
    );

    let out = stdout(&["primaries", "--r", "1", "--max-h", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["sign"], 1);
    assert_eq!(rows[1]["partition"].to_string(), "[2]");
    assert_eq!(rows[1]["sign"], -1);
    assert_eq!(rows[1]["h"], 2);

    let out = stdout(&["primaries", "--r", "2", "--max-h", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let parts: Vec<String> = rows.iter().map(|r| r["partition"].to_string()).collect();
    assert_eq!(parts, ["[]", "[1]", "[2]", "[3]"]);
    assert!(rows.iter().all(|r| r["sign"] == 1));
}

#[test]
fn char_examples() {
    assert_eq!(
        stdout(&["char", "--mu", "3,3,3", "--ct", "2,1,1,1,1,1,1,1"]),
        "0\n"
    );
    assert_eq!(stdout(&["char", "--mu", "9", "--ct", "3,3,3"]), "1\n");
    assert_eq!(stdout(&["char", "--mu", "2,1,1", "--ct", "4"]), "1\n");
}

#[test]
fn table_examples() {
    let out = stdout(&["table", "--lambda", "", "--r-list", "2", "--format", "json"]);
    assert_valid("table.schema.json", &out);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][0]["b"].to_string(), "[1]");
    assert_eq!(v["dim"]["coeffs"].to_string(), "[1]");

    // (1,1) on a transposition: C(n-2,2) - C(n-2,1)
    let out = stdout(&[
        "table", "--lambda", "1,1", "--r-list", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][0]["b"].to_string(), "[1,1,0]");
}

#[test]
fn json_outputs_validate() {
    assert_valid("table.schema.json", &golden("table-3-3.json"));
    assert_valid("primaries.schema.json", &golden("primaries-r3.json"));
    for lambda in ["", "1", "2,1", "3,3", "4,2,1,1"] {
        for r in ["1", "2", "5"] {
            let out = stdout(&["expand", "--lambda", lambda, "--r", r, "--format", "json"]);
            assert_valid("expansion.schema.json", &out);
        }
        let out = stdout(&[
            "table", "--lambda", lambda, "--r-list", "1,2,3,7", "--format", "json",
        ]);
        assert_valid("table.schema.json", &out);
    }
}

#[test]
fn schemas_reject_malformed_documents() {
    let compiled =
        jsonschema::JSONSchema::compile(&common::schema("expansion.schema.json")).unwrap();
    let bad = serde_json::json!({"lambda": [3, 3], "r": 0, "k": 6, "shift": 0, "b": [1]});
    assert!(!compiled.is_valid(&bad));
    let bad = serde_json::json!({"lambda": [3, 3], "r": 2, "k": 6, "shift": 2, "b": ["5"]});
    assert!(!compiled.is_valid(&bad));
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["expand", "--lambda", "3,4", "--r", "2"],
        &["expand", "--lambda", "3,x", "--r", "2"],
        &["expand", "--lambda", "3,-1", "--r", "2"],
        &["expand", "--lambda", "3,3", "--r", "0"],
        &["primaries", "--r", "0", "--max-h", "3"],
        &["char", "--mu", "2,1", "--ct", "4"],
        &["table", "--lambda", "3,3", "--r-list", "2,0"],
        &["expand", "--lambda", "3,3", "--r", "2", "--format", "yaml"],
        &["verify", "--max-k", "0"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = charpoly(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_small_sweeps_exit_0() {
    for args in [
        ["verify", "--max-k", "6", "--max-r", "4", "--n-window", "4"],
        ["verify", "--max-k", "1", "--max-r", "1", "--n-window", "1"],
    ] {
        let out = charpoly(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stdout)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("summary: 30 properties, 0 failed"), "{text}");
    }
}

#[test]
fn verify_is_deterministic_across_runs_and_jobs() {
    let base = ["verify", "--max-k", "6", "--max-r", "4", "--n-window", "3"];
    let a = charpoly(&base);
    let b = charpoly(&base);
    let mut par = base.to_vec();
    par.extend(["--jobs", "4"]);
    let c = charpoly(&par);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    // timing goes to stderr only
    assert!(!String::from_utf8_lossy(&a.stdout).contains("elapsed"));
    assert!(String::from_utf8_lossy(&a.stderr).contains("elapsed"));
}

#[test]
fn injected_sign_flip_exits_1_with_counterexample() {
    let out = charpoly(&[
        "verify",
        "--max-k",
        "5",
        "--max-r",
        "3",
        "--n-window",
        "2",
        "--inject-fault",
        "sign-flip",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("[FAIL] stability/main-oracle"), "{stdout}");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("λ=") && stderr.contains("r=") && stderr.contains("n="),
        "{stderr}"
    );
}

/// Every `$ charpoly ...` transcript in the guide reproduces verbatim.
#[test]
fn book_transcripts_are_current() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src/cli.md");
    let book = std::fs::read_to_string(path).unwrap();
    let mut blocks = 0;
    for block in book.split("```text\n").skip(1) {
        let block = block.split("```").next().unwrap();
        for session in block.split("$ charpoly ").skip(1) {
            let (cmd, expected) = session.split_once('\n').unwrap();
            let args: Vec<&str> = cmd.split_whitespace().collect();
            let expected = expected.trim_end_matches('\n').to_string() + "\n";
            assert_eq!(stdout(&args), expected, "charpoly {cmd}");
            blocks += 1;
        }
    }
    assert_eq!(blocks, 3);
}
