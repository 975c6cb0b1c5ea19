//! Fixed numeric feature schemas for candidate sets and single candidates.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hash::{feature_hash, fnv1a};
use crate::lexer::{identifier_prefix, tokenize, TokenKind};
use crate::strategy::{primary_dimension, Candidate, GLOBAL, LM, LOCAL};

/// Marks a missing value. No real feature takes this value except, in
/// principle, a log-probability of exactly -1.
pub const SENTINEL: f64 = -1.0;

/// Strategies with dedicated feature slots, in slot order.
pub const STRATEGY_SLOTS: [&str; 3] = [GLOBAL, LOCAL, LM];

const CONTEXT_FIELDS: [&str; 7] = [
    "line_number",
    "tokens_in_current_line",
    "prefix_length",
    "prefix_is_capitalized",
    "last_token_hash",
    "last_symbol_hash",
    "chars_since_line_start",
];

const SCORE_DIMENSIONS: [&str; 5] = [
    "global_count",
    "global_file_count",
    "global_project_count",
    "local_count",
    "lm_logprob",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureKind {
    Numeric,
    CategoricalHashed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Set,
    Candidate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureField {
    pub name: String,
    pub kind: FeatureKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureSchema {
    pub level: Level,
    pub fields: Vec<FeatureField>,
    /// Derived from the level and the ordered field list.
    pub version: String,
}

impl FeatureSchema {
    fn new(level: Level, names: Vec<String>) -> Self {
        let fields: Vec<FeatureField> = names
            .into_iter()
            .map(|name| {
                let kind = if name.ends_with("_hash") {
                    FeatureKind::CategoricalHashed
                } else {
                    FeatureKind::Numeric
                };
                FeatureField { name, kind }
            })
            .collect();
        let mut key = format!("{level:?}");
        for f in &fields {
            key.push('|');
            key.push_str(&f.name);
        }
        let version = format!("{}-{:016x}", format!("{level:?}").to_lowercase(), fnv1a(key.as_bytes()));
        FeatureSchema { level, fields, version }
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|f| f.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.fields.iter().position(|f| f.name == name)
    }

    pub fn check(&self, v: &FeatureVector) -> Result<()> {
        if v.version != self.version || v.values.len() != self.len() {
            return Err(Error::SchemaMismatch {
                expected: self.version.clone(),
                found: v.version.clone(),
            });
        }
        Ok(())
    }
}

pub fn set_schema() -> &'static FeatureSchema {
    static SCHEMA: OnceLock<FeatureSchema> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let mut names: Vec<String> = CONTEXT_FIELDS.iter().map(|s| s.to_string()).collect();
        for s in STRATEGY_SLOTS {
            for f in ["count", "top1_score", "top2_score", "top1_length", "top2_length"] {
                names.push(format!("{s}_{f}"));
            }
        }
        names.push("max_cross_strategy_occurrence".into());
        names.push("total_candidate_count".into());
        FeatureSchema::new(Level::Set, names)
    })
}

pub fn candidate_schema() -> &'static FeatureSchema {
    static SCHEMA: OnceLock<FeatureSchema> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let mut names: Vec<String> = CONTEXT_FIELDS.iter().map(|s| s.to_string()).collect();
        names.push("candidate_length".into());
        names.extend(SCORE_DIMENSIONS.iter().map(|s| s.to_string()));
        names.push("provenance_count".into());
        names.extend(STRATEGY_SLOTS.iter().map(|s| format!("{s}_rank")));
        FeatureSchema::new(Level::Candidate, names)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub values: Vec<f64>,
    pub level: Level,
    pub version: String,
}

/// Features of the text before the cursor, in schema order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContextFeatures(pub [f64; CONTEXT_FIELDS.len()]);

impl ContextFeatures {
    pub fn get(&self, name: &str) -> Option<f64> {
        CONTEXT_FIELDS.iter().position(|&f| f == name).map(|i| self.0[i])
    }
}

/// Start of the line `back` lines above the cursor line.
fn lines_back(context: &str, back: usize) -> usize {
    let mut end = context.len();
    for _ in 0..=back {
        match context[..end].rfind('\n') {
            Some(i) => end = i,
            None => return 0,
        }
    }
    end + 1
}

pub fn extract_context(context: &str) -> ContextFeatures {
    let line_start = context.rfind('\n').map_or(0, |i| i + 1);
    let line_number = context.bytes().filter(|&b| b == b'\n').count();
    let prefix = identifier_prefix(context);
    let line_tokens = tokenize(&context[line_start..])
        .iter()
        .filter(|t| !matches!(t.kind, TokenKind::Whitespace | TokenKind::Newline))
        .count();
    // a few lines of look-back are enough to find the previous token
    let before = &context[..context.len() - prefix.len()];
    let tail = &before[lines_back(before, 3)..];
    let tokens = tokenize(tail);
    let mut meaningful = tokens
        .iter()
        .rev()
        .filter(|t| !matches!(t.kind, TokenKind::Whitespace | TokenKind::Newline | TokenKind::Comment));
    let last_token = meaningful.next().map_or(SENTINEL, |t| feature_hash(t.text));
    let last_symbol = tokens
        .iter()
        .rev()
        .find(|t| t.kind == TokenKind::Symbol)
        .map_or(SENTINEL, |t| feature_hash(t.text));
    ContextFeatures([
        line_number as f64,
        line_tokens as f64,
        prefix.chars().count() as f64,
        prefix.starts_with(|c: char| c.is_ascii_uppercase()) as u8 as f64,
        last_token,
        last_symbol,
        context[line_start..].chars().count() as f64,
    ])
}

fn strategy_list<'a>(candidates: &'a [Candidate], strategy: &str) -> Vec<(usize, &'a Candidate)> {
    let mut own: Vec<(usize, &Candidate)> = candidates
        .iter()
        .filter_map(|c| c.strategies.get(strategy).map(|&r| (r, c)))
        .collect();
    own.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.text.cmp(&b.1.text)));
    own
}

pub fn extract_set(ctx: &ContextFeatures, candidates: &[Candidate]) -> FeatureVector {
    let schema = set_schema();
    let mut values = Vec::with_capacity(schema.len());
    values.extend_from_slice(&ctx.0);
    for s in STRATEGY_SLOTS {
        let dim = primary_dimension(s).expect("slot strategies have a primary dimension");
        let own = strategy_list(candidates, s);
        let score = |i: usize| own.get(i).and_then(|(_, c)| c.score(dim)).unwrap_or(SENTINEL);
        let length = |i: usize| own.get(i).map_or(SENTINEL, |(_, c)| c.len() as f64);
        values.extend([own.len() as f64, score(0), score(1), length(0), length(1)]);
    }
    let max_occ = candidates.iter().map(|c| c.strategies.len()).max().unwrap_or(0);
    values.push(max_occ as f64);
    values.push(candidates.len() as f64);
    debug_assert_eq!(values.len(), schema.len());
    FeatureVector {
        values,
        level: Level::Set,
        version: schema.version.clone(),
    }
}

pub fn extract_candidate(ctx: &ContextFeatures, candidate: &Candidate) -> FeatureVector {
    let schema = candidate_schema();
    let mut values = Vec::with_capacity(schema.len());
    values.extend_from_slice(&ctx.0);
    values.push(candidate.len() as f64);
    for d in SCORE_DIMENSIONS {
        values.push(candidate.score(d).unwrap_or(SENTINEL));
    }
    values.push(candidate.strategies.len() as f64);
    for s in STRATEGY_SLOTS {
        values.push(candidate.strategies.get(s).map_or(SENTINEL, |&r| r as f64));
    }
    debug_assert_eq!(values.len(), schema.len());
    FeatureVector {
        values,
        level: Level::Candidate,
        version: schema.version.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{DIM_GLOBAL_COUNT, DIM_LM_LOGPROB, DIM_LOCAL_COUNT};

    fn val(v: &FeatureVector, schema: &FeatureSchema, name: &str) -> f64 {
        v.values[schema.index_of(name).unwrap()]
    }

    #[test]
    fn context_prefix_fields() {
        let c = extract_context("class A {\n  int Acl");
        assert_eq!(c.get("prefix_length"), Some(3.0));
        assert_eq!(c.get("prefix_is_capitalized"), Some(1.0));
        assert_eq!(c.get("line_number"), Some(1.0));
        assert_eq!(c.get("tokens_in_current_line"), Some(2.0));
        assert_eq!(c.get("last_token_hash"), Some(feature_hash("int")));
        assert_eq!(c.get("chars_since_line_start"), Some(9.0));
    }

    #[test]
    fn file_start() {
        let c = extract_context("");
        assert_eq!(c.get("line_number"), Some(0.0));
        assert_eq!(c.get("tokens_in_current_line"), Some(0.0));
        assert_eq!(c.get("last_token_hash"), Some(SENTINEL));
    }

    #[test]
    fn last_symbol_after_assignment() {
        let c = extract_context("int x = ");
        assert_eq!(c.get("last_symbol_hash"), Some(feature_hash("=")));
        assert_eq!(c.get("prefix_length"), Some(0.0));
    }

    #[test]
    fn empty_set() {
        let v = extract_set(&extract_context("x"), &[]);
        let s = set_schema();
        for slot in STRATEGY_SLOTS {
            assert_eq!(val(&v, s, &format!("{slot}_count")), 0.0);
            assert_eq!(val(&v, s, &format!("{slot}_top1_score")), SENTINEL);
        }
        assert_eq!(val(&v, s, "total_candidate_count"), 0.0);
    }

    #[test]
    fn set_aggregates() {
        let mut shared = Candidate::new("Entries", GLOBAL, 1).with_score(DIM_GLOBAL_COUNT, 9.0);
        shared.strategies.insert(LOCAL.into(), 1);
        shared.scores.insert(DIM_LOCAL_COUNT.into(), 2.0);
        let lm_a = Candidate::new("a;", LM, 1).with_score(DIM_LM_LOGPROB, -1.2);
        let lm_b = Candidate::new("ab;", LM, 2).with_score(DIM_LM_LOGPROB, -2.0);
        let v = extract_set(&extract_context("x"), &[lm_b, shared, lm_a]);
        let s = set_schema();
        assert_eq!(val(&v, s, "max_cross_strategy_occurrence"), 2.0);
        assert_eq!(val(&v, s, "lm_top1_score"), -1.2);
        assert_eq!(val(&v, s, "lm_top2_score"), -2.0);
        assert_eq!(val(&v, s, "lm_top2_length"), 3.0);
        assert_eq!(val(&v, s, "global_count"), 1.0);
        assert_eq!(val(&v, s, "total_candidate_count"), 3.0);
    }

    #[test]
    fn candidate_slots() {
        let c = Candidate::new("DefaultEntries", LOCAL, 2).with_score(DIM_LOCAL_COUNT, 4.0);
        let s = candidate_schema();
        let a = extract_candidate(&extract_context("int x = "), &c);
        let b = extract_candidate(&extract_context("class A {\n  List<X> "), &c);
        assert_eq!(val(&a, s, "candidate_length"), 14.0);
        assert_eq!(val(&a, s, "provenance_count"), 1.0);
        assert_eq!(val(&a, s, "local_rank"), 2.0);
        assert_eq!(val(&a, s, "global_rank"), SENTINEL);
        let ctx_len = CONTEXT_FIELDS.len();
        assert_ne!(a.values[..ctx_len], b.values[..ctx_len]);
        assert_eq!(a.values[ctx_len..], b.values[ctx_len..]);
    }

    #[test]
    fn versions_differ_by_level_and_fields() {
        assert_ne!(set_schema().version, candidate_schema().version);
        let a = FeatureSchema::new(Level::Set, vec!["a".into(), "b".into()]);
        let b = FeatureSchema::new(Level::Set, vec!["b".into(), "a".into()]);
        assert_ne!(a.version, b.version);
        let v = extract_set(&extract_context(""), &[]);
        assert!(candidate_schema().check(&v).is_err());
        assert!(set_schema().check(&v).is_ok());
    }
}
