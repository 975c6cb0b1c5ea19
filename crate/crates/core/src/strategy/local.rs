//! Local Frequency: token counts over the code already typed in this file.

use std::collections::HashMap;

use super::{Candidate, DIM_LOCAL_COUNT, LOCAL};
use crate::lexer::{identifier_prefix, tokenize};

#[derive(Debug, Clone, Default)]
pub struct LocalFrequency {
    counts: HashMap<String, u64>,
    /// Byte offset of the first token not yet known to be complete.
    consumed: usize,
}

impl LocalFrequency {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_token(&mut self, token: &str) {
        *self.counts.entry(token.to_string()).or_insert(0) += 1;
    }

    pub fn count(&self, token: &str) -> u64 {
        self.counts.get(token).copied().unwrap_or(0)
    }

    /// Every counted token, in lexicographic order.
    pub fn vocabulary(&self) -> impl Iterator<Item = (&str, u64)> {
        let mut all: Vec<(&str, u64)> = self.counts.iter().map(|(t, &n)| (t.as_str(), n)).collect();
        all.sort_unstable();
        all.into_iter()
    }

    /// Brings the counts up to date with `context`, the text before the
    /// cursor. A token is counted once another token follows it, so the
    /// token under the cursor is never seen. Contexts are expected to grow
    /// monotonically; a shorter one resets the state.
    pub fn observe(&mut self, context: &str) {
        if context.len() < self.consumed || !context.is_char_boundary(self.consumed) {
            *self = Self::default();
        }
        let tail = &context[self.consumed..];
        let tokens = tokenize(tail);
        let Some(last) = tokens.last() else { return };
        let pending_at = self.consumed + last.offset;
        for tok in &tokens[..tokens.len() - 1] {
            if tok.kind.is_word() {
                self.add_token(tok.text);
            }
        }
        self.consumed = pending_at;
    }

    /// Up to `k` seen tokens extending `prefix`, most frequent first, ties
    /// broken lexicographically.
    pub fn query(&self, prefix: &str, k: usize) -> Vec<Candidate> {
        if prefix.is_empty() || k == 0 {
            return Vec::new();
        }
        let mut hits: Vec<(&str, u64)> = self
            .counts
            .iter()
            .filter(|(t, _)| t.len() > prefix.len() && t.starts_with(prefix))
            .map(|(t, &n)| (t.as_str(), n))
            .collect();
        hits.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        hits.into_iter()
            .take(k)
            .enumerate()
            .map(|(i, (t, n))| Candidate::new(&t[prefix.len()..], LOCAL, i + 1).with_score(DIM_LOCAL_COUNT, n as f64))
            .collect()
    }

    pub fn query_context(&mut self, context: &str, k: usize) -> Vec<Candidate> {
        self.observe(context);
        self.query(identifier_prefix(context), k)
    }
}
