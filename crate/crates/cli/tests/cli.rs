//! The `cce` binary: exit codes, summary lines, idempotent reruns.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cce_cli::artifacts::digest_tree;

fn toy_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/toy_corpus")
}

fn write_config(dir: &Path, extra: &str) -> PathBuf {
    let path = dir.join("cce.toml");
    let text = format!("seed = 3\n{extra}\n[paths]\ncorpus = {:?}\nbuild = \"out\"\n", toy_corpus());
    fs::write(&path, text).unwrap();
    path
}

fn cce(config: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cce"))
        .arg("--config")
        .arg(config)
        .args(args)
        .output()
        .expect("runs cce")
}

fn summary(out: &Output) -> serde_json::Value {
    let stdout = String::from_utf8_lossy(&out.stdout);
    let line = stdout.lines().last().unwrap_or_default();
    serde_json::from_str(line).unwrap_or_else(|e| panic!("summary line {line:?}: {e}"))
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = cce(&dir.path().join("none.toml"), &["ingest"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "[beam]\nwidth = 3\n").unwrap();
    assert_eq!(cce(&bad, &["ingest"]).status.code(), Some(2));

    let cfg = write_config(dir.path(), "");
    let out = cce(&cfg, &["fit"]);
    assert_eq!(out.status.code(), Some(3));
    let s = summary(&out);
    assert_eq!(s["exit_code"], 3);
    assert!(s["error"].as_str().unwrap().contains("simulate"), "{s}");

    let out = cce(&cfg, &["train-strategies"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(summary(&out)["error"].as_str().unwrap().contains("ingest"));
}

#[test]
fn help_documents_config_keys() {
    let out = Command::new(env!("CARGO_BIN_EXE_cce")).args(["simulate", "--help"]).output().unwrap();
    let help = String::from_utf8_lossy(&out.stdout);
    for key in ["workers", "beam.threshold", "beam.time_budget_ms", "engine.lm_trigger", "strategies.lm"] {
        assert!(help.contains(key), "simulate --help lacks {key}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_cce")).args(["fit", "--help"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("gbdt.ranking.min_samples_leaf"));
}

#[test]
fn pipeline_is_idempotent_and_completes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "workers = 2");
    let out = cce(&cfg, &["all"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    let commands: Vec<String> = stdout
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["command"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(commands, ["ingest", "train-strategies", "simulate", "fit", "eval"]);

    let build = dir.path().join("out");
    let manifest: serde_json::Value = serde_json::from_str(&fs::read_to_string(build.join("digests.json")).unwrap()).unwrap();
    for key in ["build/corpus/files.jsonl", "build/strategies/lm.json", "models/ranking.json", "reports/ablation.csv"] {
        assert!(manifest.get(key).is_some(), "manifest lacks {key}");
    }
    let before = digest_tree(&build).unwrap();
    assert!(cce(&cfg, &["all"]).status.success());
    assert_eq!(digest_tree(&build).unwrap(), before, "rerun changed artifacts");

    let source = dir.path().join("Demo.java");
    fs::write(&source, "public class Demo {\n    private int entryCount = 0;\n    public int getEntr").unwrap();
    let chars = fs::read_to_string(&source).unwrap().chars().count().to_string();
    let out = cce(&cfg, &["complete", "--file", source.to_str().unwrap(), "--offset", &chars]);
    assert!(out.status.success());
    let s = summary(&out);
    assert_eq!(s["list"]["mode"], "fusion");
    assert!(s["list"]["candidates"].as_array().is_some_and(|c| c.len() <= 5));

    let empty = dir.path().join("Empty.java");
    fs::write(&empty, "").unwrap();
    let s = summary(&cce(&cfg, &["complete", "--file", empty.to_str().unwrap(), "--offset", "0"]));
    assert_eq!(s["list"]["accepted"], false);
    assert_eq!(s["list"]["candidates"].as_array().map(Vec::len), Some(0));

    let out = cce(&cfg, &["complete", "--file", empty.to_str().unwrap(), "--offset", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
