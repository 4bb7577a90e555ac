//! The command-line front end, driven in-process.

use std::path::PathBuf;

use clap::Parser;
use hopfforge::cli::{run, Cli, Outcome, EXIT_EXTEND, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.display().to_string()
}

fn scratch(name: &str, text: &str) -> String {
    let p = std::env::temp_dir().join(format!("hopfforge-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn exec(args: &[&str]) -> Outcome {
    let cli = Cli::try_parse_from(std::iter::once("hopfforge").chain(args.iter().copied())).unwrap();
    run(&cli)
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = exec(&all);
    let text = if out.stdout.is_empty() { &out.stderr } else { &out.stdout };
    (out.code, serde_json::from_str(text).unwrap())
}

#[test]
fn sample_files_verify() {
    for name in ["a2.json", "a2_tuple.json", "example_l.json", "r1.json", "r2.json", "r3.json", "c8.json", "taft3.json"]
    {
        let (code, v) = json(&["verify", &data(name)]);
        assert_eq!(code, EXIT_OK, "{name}: {v}");
        assert_eq!(v["all_passed"], true);
        assert_eq!(v["filtration"]["pointed"], true);
    }
}

#[test]
fn build_reproduces_the_sample_algebra() {
    let out = exec(&["--format", "json", "build", &data("a2_tuple.json")]);
    assert_eq!(out.code, EXIT_OK);
    let built: Value = serde_json::from_str(&out.stdout).unwrap();
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(data("a2.json")).unwrap()).unwrap();
    assert_eq!(built, stored);
}

#[test]
fn classify_and_iso_verdicts() {
    let (code, v) = json(&["classify", &data("a2.json")]);
    assert_eq!((code, v["type"].as_u64()), (EXIT_OK, Some(3)));
    let (_, v) = json(&["classify", &data("example_l.json")]);
    assert_eq!(v["type"].as_u64(), Some(2));

    let (code, v) = json(&["iso", &data("r1.json"), &data("r2.json")]);
    assert_eq!((code, v["verdict"].as_str()), (EXIT_OK, Some("isomorphic")), "{v}");
    assert_eq!(v["witness"]["beta"], "2");
    let (code, v) = json(&["iso", &data("r1.json"), &data("r3.json")]);
    assert_eq!((code, v["verdict"].as_str()), (EXIT_FAILED, Some("not_isomorphic")), "{v}");
    assert_eq!(v["flips_over_degree"], 2);
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        vec!["rep", data("a2.json").leak() as &str],
        vec!["--format", "json", "rep", data("c8.json").leak(), "--blocks"],
        vec!["--format", "json", "classify", data("example_l.json").leak()],
        vec!["selftest", "-p", "2,3", "--max-n", "16"],
    ] {
        let first = exec(&args);
        assert_eq!(first.code, EXIT_OK, "{args:?}: {}", first.stderr);
        assert_eq!(first, exec(&args), "{args:?}");
    }
}

#[test]
fn c8_blocks_are_reported() {
    let (code, v) = json(&["rep", &data("c8.json"), "--blocks"]);
    assert_eq!(code, EXIT_OK);
    let blocks = v["blocks"].as_array().unwrap();
    let mut tags: Vec<&str> = blocks.iter().map(|b| b["tag"].as_str().unwrap()).collect();
    tags.sort();
    assert_eq!(tags, ["matrix-like", "taft-like"]);
    assert!(blocks.iter().all(|b| b["dim"] == 16));
}

#[test]
fn error_exit_codes() {
    let broken = scratch("broken.json", "{\"p\": 2,");
    let (code, v) = json(&["verify", &broken]);
    assert_eq!(code, EXIT_INPUT);
    assert!(v["error"].as_str().unwrap().contains("broken.json:"), "{v}");

    // χ(a) = 2 has order 4 in F_5, not a character of C_3
    let bad = scratch(
        "bad_chi.json",
        r#"{"p": 5, "variant": "R", "group": {"kind": "cyclic", "orders": [3], "a": [1]}, "chi": [2], "alpha": [0]}"#,
    );
    assert_eq!(json(&["verify", &bad]).0, EXIT_INPUT);

    let (code, v) = json(&["--field", "2,2", "verify", &data("a2.json")]);
    assert_eq!(code, EXIT_INPUT, "{v}");
    let (code, _) = json(&["--field", "3,2", "verify", &data("a2_tuple.json")]);
    assert_eq!(code, EXIT_INPUT);

    // kC_3 over F_2 does not split; GF(4) does
    let kc3 = scratch(
        "kc3.json",
        r#"{"p": 2, "variant": "F", "group": {"kind": "cyclic", "orders": [3], "a": [0]}, "alpha": [0, 0]}"#,
    );
    let (code, v) = json(&["rep", &kc3, "--simples"]);
    assert_eq!(code, EXIT_EXTEND, "{v}");
    assert!(v["hint"].as_str().unwrap().contains("--field p,2"));
    let (code, v) = json(&["--field", "2,2", "rep", &kc3, "--simples"]);
    assert_eq!((code, v["simples"].as_array().map(|s| s.len())), (EXIT_OK, Some(3)));

    assert!(Cli::try_parse_from(["hopfforge", "--field", "2", "verify", "x"]).is_err());
    assert!(Cli::try_parse_from(["hopfforge", "--budget", "0", "verify", "x"]).is_err());
}
