use std::process::Command as Process;

use hopfcyc_cli::commands::{run, Command, Options, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_PASS, EXIT_RESOURCE};
use serde_json::{json, Value};

fn opts(object: &str) -> Options {
    Options { object: Some(object.into()), timings: false, ..Options::default() }
}

fn with_pair(object: &str, pair: &str) -> Options {
    Options { pair: Some(pair.into()), ..opts(object) }
}

/// Every boolean anywhere in the document.
fn booleans(v: &Value, out: &mut Vec<bool>) {
    match v {
        Value::Bool(b) => out.push(*b),
        Value::Array(xs) => xs.iter().for_each(|x| booleans(x, out)),
        Value::Object(m) => m.values().for_each(|x| booleans(x, out)),
        _ => {}
    }
}

fn assert_exit_matches_booleans(doc: &Value, exit: i32) {
    let mut bs = Vec::new();
    booleans(doc, &mut bs);
    assert_eq!(exit == EXIT_PASS, bs.iter().all(|b| *b), "{doc:#}");
}

#[test]
fn cyclic_verify_h4_eps_g_level_4() {
    let o = run(Command::CyclicVerify, &Options { max_level: 4, ..with_pair("H4", "eps_g") });
    assert_eq!(o.exit_code, EXIT_PASS, "{}", o.summary);
    assert!(o.document["checks"].as_array().unwrap().iter().any(|c| c["name"] == "cyclic_order[n=4]"));
    assert_eq!(o.document["data"]["level_dims"][4], json!(256));
    assert_exit_matches_booleans(&o.document, o.exit_code);
}

#[test]
fn cohomology_of_trivial() {
    let o = run(Command::Cohomology, &Options { max_degree: 2, ..opts("trivial") });
    assert_eq!(o.exit_code, EXIT_PASS);
    assert_eq!(o.document["data"]["cyclic"], json!([1, 0, 1]));
    assert_eq!(o.document["data"]["hochschild"], json!([1, 0, 0]));
}

#[test]
fn pair_check_rejects_eps_one_on_h4() {
    let o = run(Command::PairCheck, &with_pair("H4", "eps_one"));
    assert_eq!(o.exit_code, EXIT_CHECK_FAILED);
    let failed: Vec<&str> = o.document["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"involution"), "{failed:?}");
    assert_exit_matches_booleans(&o.document, o.exit_code);
}

#[test]
fn level_cap_is_a_resource_error() {
    let o = run(Command::CyclicVerify, &Options { max_level: 2, max_space: 10, ..with_pair("H4", "eps_g") });
    assert_eq!(o.exit_code, EXIT_RESOURCE);
    assert_eq!(o.document["error"]["kind"], "resource_cap");
}

#[test]
fn unknown_object_is_an_input_error() {
    let o = run(Command::Validate, &opts("Q8"));
    assert_eq!(o.exit_code, EXIT_INPUT);
    assert_eq!(o.document["error"]["kind"], "input");
}

#[test]
fn unchecked_module_reports_involution_failure() {
    let o = run(Command::CyclicVerify, &Options { max_level: 1, unchecked: true, ..with_pair("H4", "eps_one") });
    assert_eq!(o.exit_code, EXIT_CHECK_FAILED);
    let order = o.document["checks"].as_array().unwrap().iter().find(|c| c["name"] == "cyclic_order[n=1]").unwrap();
    assert_eq!(order["passed"], false);
    assert_eq!(order["witness"], json!({ "basis": [2] }));
    let guarded = run(Command::CyclicVerify, &with_pair("H4", "eps_one"));
    assert_eq!(guarded.exit_code, EXIT_CHECK_FAILED);
}

#[test]
fn validate_every_builtin_object() {
    for (_, m) in hopfcyc_cli::builtin::all() {
        for name in m.algebras.iter().map(|a| &a.name).chain(m.module_algebras.iter().map(|a| &a.name)) {
            let o = run(Command::Validate, &opts(name));
            let expect = if name == "broken_translation" { EXIT_CHECK_FAILED } else { EXIT_PASS };
            assert_eq!(o.exit_code, expect, "{}", o.summary);
            assert_exit_matches_booleans(&o.document, o.exit_code);
        }
    }
}

#[test]
fn pair_search_finds_pairs() {
    let o = run(Command::PairSearch, &opts("H4"));
    assert_eq!(o.exit_code, EXIT_PASS);
    assert!(o.document["data"]["pairs"].as_array().unwrap().contains(&json!({ "sigma": "g", "delta": "eps" })));
    let o = run(Command::PairSearch, &opts("taft3"));
    assert_eq!(o.exit_code, EXIT_PASS);
    assert_eq!(o.document["data"]["candidates"], json!(9));
}

#[test]
fn section_four_commands() {
    for r in ["R0", "R1"] {
        let o = run(Command::Drinfeld, &Options { r: Some(r.into()), ..opts("H4") });
        assert_eq!(o.exit_code, EXIT_PASS, "{}", o.summary);
        let o = run(Command::DoubleCover, &Options { r: Some(r.into()), ..opts("H4") });
        assert_eq!(o.exit_code, EXIT_PASS, "{}", o.summary);
        assert_eq!(o.document["data"]["dim"], json!(8));
    }
}

#[test]
fn dual_exports_a_loadable_algebra() {
    let o = run(Command::Dual, &opts("H4"));
    assert_eq!(o.exit_code, EXIT_PASS, "{}", o.summary);
    assert_eq!(o.document["data"]["dual"]["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn charmap_commands() {
    let o = run(Command::TraceSpace, &opts("translation"));
    assert_eq!(o.exit_code, EXIT_PASS);
    assert_eq!(o.document["data"]["dimension"], json!(1));

    let o = run(Command::CharmapVerify, &opts("translation"));
    assert_eq!(o.exit_code, EXIT_PASS, "{}", o.summary);
    let o = run(Command::CharmapVerify, &Options { trace: Some("evaluation".into()), ..opts("translation") });
    assert_eq!(o.exit_code, EXIT_CHECK_FAILED);
    let o = run(Command::CharmapVerify, &Options { max_level: 2, ..opts("conjugation") });
    assert_eq!(o.exit_code, EXIT_PASS, "{}", o.summary);
    assert_eq!(o.document["data"]["pair"], "eps_g");
}

#[test]
fn reports_are_deterministic_without_timings() {
    let a = run(Command::CyclicVerify, &with_pair("H4", "eps_g"));
    let b = run(Command::CyclicVerify, &with_pair("H4", "eps_g"));
    assert_eq!(a.document.to_string(), b.document.to_string());
    assert!(a.document.get("timings_ms").is_none());
    let timed = run(Command::CyclicVerify, &Options { timings: true, ..with_pair("H4", "eps_g") });
    assert!(timed.document["timings_ms"]["total"].is_number());
}

#[test]
fn export_then_load_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_hopfcyc");
    let status = Process::new(bin)
        .args(["export-catalog", "--no-timings", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(status.status.success());
    let manifest = dir.path().join("rationals.json");
    let out = Process::new(bin)
        .args(["cyclic-verify", "--object", "H4", "--pair", "eps_g", "--max-level", "2", "--manifest"])
        .arg(&manifest)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "hopf-cyclic-report/v1");
    assert_eq!(doc["passed"], true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("checks passed"));

    let missing = Process::new(bin)
        .args(["validate", "--object", "H4", "--manifest"])
        .arg(dir.path().join("missing.json"))
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(EXIT_INPUT));
}

#[test]
fn binary_rejects_unknown_command() {
    let out = Process::new(env!("CARGO_BIN_EXE_hopfcyc")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
