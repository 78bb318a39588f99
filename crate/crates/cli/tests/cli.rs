use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rejectia::io::{AlgebraJson, ModuleJson};
use rejectia::strat::IdempotentChain;
use rejectia::{Config, PrimeField};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rejectia"))
        .args(args)
        .env_remove("REJECTIA_SEED")
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code().unwrap(), v)
}

fn text(args: &[&str]) -> (i32, String) {
    let mut a = vec!["--format", "text"];
    a.extend_from_slice(args);
    let out = run(&a);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn right_cancellation_of_the_rrc_example() {
    let (code, v) = json(&["chain", "rrc.json", "--method", "cancel-right"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["chain"], "{3}⊂{2,3}⊂{1,2,3}");
    assert_eq!(v["result"]["report"]["complete"], true);
}

#[test]
fn right_cancellation_of_the_qh_example_has_no_eligible_object() {
    let (code, out) = text(&["chain", "qh.json", "--method", "cancel-right"]);
    assert_eq!(code, 1);
    assert!(out.contains("no eligible object at step 1"), "{out}");
}

#[test]
fn qh_verdicts() {
    let (code, out) = text(&["qh", "qh.json"]);
    assert_eq!(code, 0);
    assert!(out.contains("quasi-hereditary: yes"), "{out}");
    let (code, out) = text(&["qh", "qh.json", "--chain", "{2}⊂{1,2}⊂{1,2,3}"]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = text(&["qh", "rrc.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("quasi-hereditary: no"), "{out}");
    let (code, _) = text(&["qh", "rrc.json", "--chain", "{3}⊂{2,3}⊂{1,2,3}"]);
    assert_eq!(code, 1);
}

#[test]
fn gldim_of_a2() {
    let (code, v) = json(&["gldim", "a2.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["gldim"]["finite"], 1);
    let (code, v) = json(&["--field", "0", "gldim", "a2.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["field"], 0);
    assert_eq!(v["result"]["gldim"]["finite"], 1);
}

#[test]
fn psi_of_the_simple_dual_numbers_module() {
    let (code, v) = json(&["psi", "dual_numbers.json", "--module", "simple_dual_numbers.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["phi"], 0);
    assert_eq!(v["result"]["psi"], 0);
    let (_, out) = text(&["psi", "dual_numbers.json", "--module", "simple_dual_numbers.json"]);
    assert!(out.contains("φ = 0, ψ = 0"), "{out}");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&["alg-check", "malformed_relation.json"]).status.code(), Some(2));
    assert_eq!(run(&["alg-check", "missing.json"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "4", "alg-check", "a2.json"]).status.code(), Some(2));
    assert_eq!(run(&["qh", "qh.json", "--chain", "{2}⊂{1,2,3}⊂{1,2}"]).status.code(), Some(2));
}

#[test]
fn caps_exit_with_three() {
    let (code, v) = json(&["resdim", "cubic.json", "--module", "cubic_radical.json"]);
    assert_eq!(code, 3);
    assert_eq!(v["result"]["resdim"], "unknown");
    assert_eq!(run(&["--qh-bound", "2", "qh", "qh.json"]).status.code(), Some(3));
}

#[test]
fn other_verbs() {
    let (code, v) = json(&["repdim", "cubic.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["exact"], 2);
    let (code, _) = text(&["neat", "qh.json", "--chain", "{2}⊂{1,2}⊂{1,2,3}"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["chain", "cubic.json", "--method", "radical-series"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["length"], 3);
    let (code, v) = json(&["chain", "cubic.json", "--method", "iterated-radical"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["complete"], true);
    let (code, v) = json(&["gldim", "cubic.json", "--end"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["gldim_end"], "infinite");
    let (code, v) = json(&["alg-check", "dual_numbers.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["chain", "rrc.json", "--method", "cancel-right"][..],
        &["qh", "qh.json"],
        &["repdim", "cubic.json"],
        &["--format", "text", "psi", "cubic.json"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn certificate_hashes_the_result() {
    use sha2::{Digest, Sha256};
    let (_, v) = json(&["qh", "qh.json"]);
    let digest = hex::encode(Sha256::digest(v["result"].to_string().as_bytes()));
    assert_eq!(v["certificate"], digest);
    let input = std::fs::read(fixture("qh.json")).unwrap();
    assert_eq!(v["inputs"][0], hex::encode(Sha256::digest(&input)));
}

#[test]
fn emitted_json_round_trips() {
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    for name in ["rrc.json", "dual_numbers.json"] {
        let (_, v) = json(&["alg-check", fixture(name).to_str().unwrap()]);
        let emitted = &v["result"]["algebra"];
        let path = tmp.join(format!("round_trip_{name}"));
        std::fs::write(&path, emitted.to_string()).unwrap();
        let (code, w) = json(&["alg-check", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(&w["result"]["algebra"], emitted);
        assert_eq!(w["certificate"], v["certificate"]);
    }

    let (_, v) = json(&["chain", "rrc.json", "--method", "cancel-right"]);
    let cfg = Config::default();
    let k = PrimeField::new(101).unwrap();
    let a = AlgebraJson::read(&fixture("rrc.json")).unwrap().build(&k, &cfg).unwrap();
    for part in v["result"]["parts"].as_array().unwrap() {
        let mj = ModuleJson::parse(&part.to_string()).unwrap();
        let m = mj.build(&a).unwrap();
        assert_eq!(&serde_json::to_value(ModuleJson::from_module(&m)).unwrap(), part);
    }
    let display = v["result"]["chain"].as_str().unwrap();
    assert_eq!(IdempotentChain::parse(&a, display).unwrap().display(&a), display);
}

#[test]
fn seed_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_rejectia"))
        .args(["alg-check", "a2.json"])
        .env("REJECTIA_SEED", "7")
        .current_dir(fixture(""))
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 7);
}
