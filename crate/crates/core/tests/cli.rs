use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};
use superrep::cli::{run, Outcome, EXIT_INVALID, EXIT_OK, EXIT_UNDECIDED, EXIT_USAGE};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> Outcome {
    let argv = std::iter::once("superrep".to_string()).chain(args.iter().map(|a| {
        if a.ends_with(".json") && !a.contains('/') {
            data(a)
        } else {
            a.to_string()
        }
    }));
    run(argv)
}

fn json_ok(args: &[&str]) -> Value {
    let o = cli(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", o.stdout))
}

#[test]
fn classify_reports_type_family_and_quiver_class() {
    assert_eq!(
        json_ok(&["classify", "a22_species.json"]),
        json!({"type": "finite", "family": "A(2,2)", "quiver_class": "E6"})
    );
    assert_eq!(
        json_ok(&["classify", "a21_superquiver.json"]),
        json!({"type": "finite", "family": "A(2,1)", "quiver_class": "A5"})
    );
    let wild = json_ok(&["classify", "--method", "table", "kronecker3_species.json"]);
    assert_eq!(wild["type"], "wild");
    assert_eq!(wild["family"], Value::Null);
}

#[test]
fn classify_is_compact_single_line_json() {
    let o = cli(&["classify", "a22_species.json"]);
    assert_eq!(o.stdout, "{\"type\":\"finite\",\"family\":\"A(2,2)\",\"quiver_class\":\"E6\"}\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["quiver", "a22_species.json"][..],
        &["count-indec", "k_to_d_species.json"],
        &["roots", "--diagram", "D5"],
        &["smash", "d_algebra.json"],
    ] {
        assert_eq!(cli(args), cli(args), "{args:?}");
    }
}

#[test]
fn tensor_dim_finite_and_infinite() {
    assert_eq!(json_ok(&["tensor-dim", "a22_species.json"]), json!({"dim": "17"}));
    assert_eq!(json_ok(&["tensor-dim", "loop_species.json"]), json!({"dim": "infinite"}));
}

#[test]
fn roots_by_name_and_file() {
    assert_eq!(json_ok(&["roots", "--diagram", "E6"])["count"], 36);
    assert_eq!(json_ok(&["roots", "--diagram", "E8"])["count"], 120);
    let a3 = json_ok(&["roots", "a3_quiver.json"]);
    assert_eq!(a3["diagram"], "A3");
    assert_eq!(a3["count"], 6);
}

#[test]
fn algebra_commands() {
    assert_eq!(json_ok(&["validate", "d_algebra.json"])["valid"], true);
    let smash = json_ok(&["smash", "d_algebra.json"]);
    assert_eq!(smash["basis"].as_array().unwrap().len(), 4);
    assert_eq!(
        json_ok(&["species-of", "d_algebra.json"]),
        json!({"vertices": [{"id": 1, "type": "D"}], "bimodules": []})
    );
}

#[test]
fn oracle_commands() {
    let species = json_ok(&["count-indec", "k_to_d_species.json"]);
    let quiver = json_ok(&["count-indec", "--side", "quiver", "k_to_d_species.json"]);
    assert_eq!(species["total"], 6);
    assert_eq!(species["per_dim"], quiver["per_dim"]);
    let v = json_ok(&["verify-equivalence", "k_to_d_species.json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["field"], "Fp:2");
    assert_eq!(json_ok(&["count-indec", "--field", "Fp:3", "k_to_d_species.json"])["total"], 6);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&[]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["classify", "/nonexistent/x.json"]).code, EXIT_USAGE);
    assert_eq!(cli(&["count-indec", "--field", "Fp:4", "k_to_d_species.json"]).code, EXIT_USAGE);
    assert_eq!(cli(&["classify", "--field", "R", "a22_species.json"]).code, EXIT_USAGE);
    assert_eq!(cli(&["validate", "malformed.json"]).code, EXIT_INVALID);
    assert_eq!(cli(&["classify", "loop_species.json"]).code, EXIT_INVALID);
    let bad = cli(&["classify", "unrealizable_superquiver.json"]);
    assert_eq!(bad.code, EXIT_INVALID);
    assert!(bad.stderr.contains("not realizable"), "{}", bad.stderr);
    assert!(bad.stdout.is_empty());
}

#[test]
fn dot_and_out() {
    let o = cli(&["dot", "a21_superquiver.json"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("digraph {"));
    assert!(o.stdout.contains("fillcolor=black"));
    assert!(cli(&["quiver", "--dot", "a22_species.json"]).stdout.contains("\"(1,0)\" -> \"(2,0)\""));

    let dir = std::env::temp_dir().join(format!("superrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("classify.json");
    let o = cli(&["classify", "--out", out.to_str().unwrap(), "a22_species.json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written["family"], "A(2,2)");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn binary_matches_library() {
    let exe = env!("CARGO_BIN_EXE_superrep");
    let out = Command::new(exe).args(["classify", &data("a22_species.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), cli(&["classify", "a22_species.json"]).stdout);

    let out = Command::new(exe).args(["classify", &data("loop_species.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    assert!(!out.stderr.is_empty());
}

#[test]
fn budget_environment() {
    let exe = env!("CARGO_BIN_EXE_superrep");
    let count = |budget: &str| {
        Command::new(exe)
            .args(["count-indec", &data("a22_species.json")])
            .env("SUPERREP_BUDGET", budget)
            .output()
            .unwrap()
    };
    assert_eq!(count("nonsense").status.code(), Some(EXIT_USAGE));
    assert_eq!(count("total=4,tuples=10").status.code(), Some(EXIT_UNDECIDED));
    let small = count("1");
    assert_eq!(small.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&small.stdout).unwrap();
    assert_eq!(v["budget"]["total"], 1);
}
