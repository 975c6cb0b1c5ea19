//! External strategies over NDJSON, driven through small `sh` stubs.

use std::time::Duration;

use cce::strategy::{EngineConfig, ExternalSpec, ExternalStrategy, Strategies, StrategyToggles};

const REPLY: &str = r#"id=$(printf '%s' "$line" | sed 's/.*"id":\([0-9]*\).*/\1/')"#;

fn stub(id: &str, body: &str, timeout_ms: u64) -> ExternalSpec {
    ExternalSpec {
        id: id.to_string(),
        command: vec!["sh".into(), "-c".into(), body.to_string()],
        timeout_ms,
    }
}

fn echo_stub() -> ExternalSpec {
    let body = format!(
        r#"while IFS= read -r line; do {REPLY}; printf '{{"id":%s,"candidates":[{{"text":"Entries","scores":{{"conf":0.9}}}},{{"text":""}},{{"text":"Entry"}},{{"text":"x"}}]}}\n' "$id"; done"#
    );
    stub("echo", &body, 2000)
}

#[test]
fn candidates_are_namespaced_and_truncated() {
    let mut ext = ExternalStrategy::spawn(&echo_stub()).unwrap();
    let got = ext.query("List<Acl", 2);
    let texts: Vec<&str> = got.iter().map(|c| c.text.as_str()).collect();
    assert_eq!(texts, ["Entries", "Entry"]);
    assert_eq!(got[0].score("echo.conf"), Some(0.9));
    assert_eq!(got[0].strategies.get("echo"), Some(&1));
    assert_eq!(got[1].strategies.get("echo"), Some(&2));
    // the process serves more than one request
    assert_eq!(ext.query("x", 5).len(), 3);
}

#[test]
fn late_answers_are_skipped() {
    let body = format!(
        r#"n=0; while IFS= read -r line; do n=$((n+1)); {REPLY}; if [ $n = 1 ]; then sleep 0.6; fi; printf '{{"id":%s,"candidates":[{{"text":"v%s"}}]}}\n' "$id" "$id"; done"#
    );
    let mut ext = ExternalStrategy::spawn(&stub("slow", &body, 200)).unwrap();
    assert!(ext.query("a", 5).is_empty(), "first request should time out");
    std::thread::sleep(Duration::from_millis(700));
    let got = ext.query("b", 5);
    assert_eq!(got.len(), 1);
    assert_eq!(got[0].text, "v2");
}

#[test]
fn dead_or_garbled_processes_yield_nothing() {
    let mut garbled = ExternalStrategy::spawn(&stub("junk", "while read -r line; do echo not-json; done", 500)).unwrap();
    assert!(garbled.query("a", 5).is_empty());
    let mut dead = ExternalStrategy::spawn(&stub("dead", "exit 0", 500)).unwrap();
    assert!(dead.query("a", 5).is_empty());
    assert!(dead.query("b", 5).is_empty());
}

#[test]
fn bad_specs_are_config_errors() {
    assert!(ExternalStrategy::spawn(&stub("a.b", "true", 100)).is_err());
    let empty = ExternalSpec {
        id: "e".into(),
        command: vec![],
        timeout_ms: 100,
    };
    assert!(matches!(ExternalStrategy::spawn(&empty), Err(cce::Error::Config(_))));
}

#[test]
fn session_merges_external_lists() {
    let cfg = EngineConfig {
        toggles: StrategyToggles {
            global: false,
            local: true,
            lm: false,
        },
        external: vec![echo_stub()],
        ..EngineConfig::default()
    };
    let strategies = Strategies::default();
    let mut session = strategies.session(&cfg).unwrap();
    let g = session.query("int Entries = 1; int Ent").unwrap();
    let ids: Vec<&str> = g.per_strategy.iter().map(|(id, _)| id.as_str()).collect();
    assert_eq!(ids, ["local", "echo"]);
    // local offers "ries" for the prefix "Ent"; the stub's texts are merged beside it
    let merged: Vec<&str> = g.merged.iter().map(|c| c.text.as_str()).collect();
    assert!(merged.contains(&"ries") && merged.contains(&"Entries"), "{merged:?}");
}
