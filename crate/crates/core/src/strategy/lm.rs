//! Order-n token language model over BPE ids, and the line-level query
//! that runs beam search on it.
//!
//! Smoothing is interpolated absolute discounting:
//!
//! ```text
//! p(w | h) = (max(c(h w) - D, 0) + D * T(h) * p(w | h')) / c(h)
//! p(w)     = (max(c(w) - D, 0) + D * T / |V|) / N
//! ```
//!
//! where `h'` drops the oldest token of `h` and `T` counts distinct
//! continuations. Every level sums to one over the vocabulary.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use super::beam::{beam_search_until, BeamConfig, NextTokenModel};
use super::{Candidate, CANDIDATE_CAP, DIM_LM_LOGPROB, LM};
use crate::error::{Error, Result};
use crate::hash::fnv1a;
use crate::lexer::{bpe_words, identifier_prefix, BpeModel};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LmConfig {
    pub order: usize,
    pub discount: f64,
    pub vocab_size: usize,
    /// Length of the memoized best-continuation list per context.
    pub top_cache: usize,
}

impl Default for LmConfig {
    fn default() -> Self {
        LmConfig {
            order: 5,
            discount: 0.75,
            vocab_size: 1024,
            top_cache: 16,
        }
    }
}

impl LmConfig {
    pub fn validate(&self) -> Result<()> {
        if self.order < 1 {
            return Err(Error::Config("lm.order must be at least 1".into()));
        }
        if !(self.discount > 0.0 && self.discount < 1.0) {
            return Err(Error::Config("lm.discount must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

/// When the LM strategy is queried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LmTrigger {
    #[default]
    Always,
    /// only while an identifier is being typed
    IdentifierPrefix,
    Never,
}

impl LmTrigger {
    /// Never fires on an empty context: there is nothing to condition on.
    pub fn fires(self, context: &str) -> bool {
        if context.is_empty() {
            return false;
        }
        match self {
            LmTrigger::Always => true,
            LmTrigger::IdentifierPrefix => !identifier_prefix(context).is_empty(),
            LmTrigger::Never => false,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct Context {
    total: u64,
    /// (token, count), sorted by token
    next: Vec<(u32, u64)>,
}

impl Context {
    fn count(&self, token: u32) -> u64 {
        match self.next.binary_search_by_key(&token, |p| p.0) {
            Ok(i) => self.next[i].1,
            Err(_) => 0,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LmFile {
    format: String,
    order: usize,
    discount: f64,
    vocab_size: usize,
    top_cache: usize,
    unigram: Vec<u64>,
    contexts: Vec<(Vec<u32>, Vec<(u32, u64)>)>,
}

const LM_FORMAT: &str = "ngram-v1";

type TopList = Arc<[(u32, f64)]>;

pub struct LmModel {
    order: usize,
    discount: f64,
    vocab: usize,
    top_cache: usize,
    unigram: Vec<u64>,
    total: u64,
    types: u64,
    /// ids by unigram count descending, then id
    by_unigram: Vec<u32>,
    contexts: HashMap<Vec<u32>, Context>,
    memo: RwLock<HashMap<Vec<u32>, TopList>>,
}

impl std::fmt::Debug for LmModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LmModel")
            .field("order", &self.order)
            .field("vocab", &self.vocab)
            .field("contexts", &self.contexts.len())
            .finish()
    }
}

impl LmModel {
    /// Trains on id sequences, one per file. Id `vocab_size` is reserved as
    /// the beginning-of-file marker and is never predicted.
    pub fn train_ids(seqs: &[Vec<u32>], vocab_size: usize, cfg: &LmConfig) -> Result<Self> {
        cfg.validate()?;
        let bos = vocab_size as u32;
        let mut unigram = vec![0u64; vocab_size];
        let mut raw: HashMap<Vec<u32>, BTreeMap<u32, u64>> = HashMap::new();
        for seq in seqs {
            let mut ids = Vec::with_capacity(seq.len() + 1);
            ids.push(bos);
            ids.extend_from_slice(seq);
            for i in 1..ids.len() {
                let w = ids[i];
                if w as usize >= vocab_size {
                    return Err(Error::UnknownTokenId(w));
                }
                unigram[w as usize] += 1;
                for m in 1..cfg.order.min(i + 1) {
                    *raw.entry(ids[i - m..i].to_vec()).or_default().entry(w).or_insert(0) += 1;
                }
            }
        }
        let contexts = raw
            .into_iter()
            .map(|(h, next)| {
                let next: Vec<(u32, u64)> = next.into_iter().collect();
                let total = next.iter().map(|p| p.1).sum();
                (h, Context { total, next })
            })
            .collect();
        Ok(Self::assemble(cfg, vocab_size, unigram, contexts))
    }

    pub fn train<S: AsRef<str>>(texts: &[S], bpe: &BpeModel, cfg: &LmConfig) -> Result<Self> {
        let seqs = texts.iter().map(|t| bpe.encode(t.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::train_ids(&seqs, bpe.vocab_size(), cfg)
    }

    fn assemble(cfg: &LmConfig, vocab: usize, unigram: Vec<u64>, contexts: HashMap<Vec<u32>, Context>) -> Self {
        let total = unigram.iter().sum();
        let types = unigram.iter().filter(|&&c| c > 0).count() as u64;
        let mut by_unigram: Vec<u32> = (0..vocab as u32).collect();
        by_unigram.sort_by(|&a, &b| unigram[b as usize].cmp(&unigram[a as usize]).then(a.cmp(&b)));
        LmModel {
            order: cfg.order,
            discount: cfg.discount,
            vocab,
            top_cache: cfg.top_cache.max(1),
            unigram,
            total,
            types,
            by_unigram,
            contexts,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab
    }

    pub fn bos(&self) -> u32 {
        self.vocab as u32
    }

    pub fn context_count(&self) -> usize {
        self.contexts.len()
    }

    /// Unsmoothed `c(h w) / c(h)`, if `h` was seen.
    pub fn relative_frequency(&self, context: &[u32], token: u32) -> Option<f64> {
        let ctx = self.contexts.get(context)?;
        Some(ctx.count(token) as f64 / ctx.total as f64)
    }

    fn unigram_prob(&self, token: u32) -> f64 {
        let uniform = 1.0 / self.vocab as f64;
        if self.total == 0 {
            return uniform;
        }
        let c = self.unigram.get(token as usize).copied().unwrap_or(0) as f64;
        let n = self.total as f64;
        (c - self.discount).max(0.0) / n + self.discount * self.types as f64 / n * uniform
    }

    /// Trailing part of `context` the model conditions on.
    fn window<'c>(&self, context: &'c [u32]) -> &'c [u32] {
        &context[context.len().saturating_sub(self.order - 1)..]
    }

    /// Longest suffix of the window that was seen in training.
    fn effective<'c>(&self, context: &'c [u32]) -> &'c [u32] {
        let h = self.window(context);
        let mut best = &h[h.len()..];
        for m in 1..=h.len() {
            let s = &h[h.len() - m..];
            if !self.contexts.contains_key(s) {
                break;
            }
            best = s;
        }
        best
    }

    pub fn prob(&self, context: &[u32], token: u32) -> f64 {
        if token as usize >= self.vocab {
            return 0.0;
        }
        let h = self.effective(context);
        let mut p = self.unigram_prob(token);
        for m in 1..=h.len() {
            let ctx = &self.contexts[&h[h.len() - m..]];
            let t = ctx.next.len() as f64;
            let c = ctx.count(token) as f64;
            p = ((c - self.discount).max(0.0) + self.discount * t * p) / ctx.total as f64;
        }
        p
    }

    fn compute_top(&self, h: &[u32], k: usize) -> Vec<(u32, f64)> {
        let mut pool: HashSet<u32> = HashSet::new();
        for m in 1..=h.len() {
            pool.extend(self.contexts[&h[h.len() - m..]].next.iter().map(|p| p.0));
        }
        let explicit = pool.len();
        // outside the explicit sets the order is the unigram order
        pool.extend(self.by_unigram.iter().copied().filter(|t| !pool.contains(t)).take(k).collect::<Vec<_>>());
        debug_assert!(pool.len() <= explicit + k);
        let mut scored: Vec<(u32, f64)> = pool.into_iter().map(|t| (t, self.prob(h, t).ln())).collect();
        scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        scored.truncate(k);
        scored
    }

    /// The `k` most probable next tokens, best first, ties by lower id.
    pub fn top_next(&self, context: &[u32], k: usize) -> Vec<(u32, f64)> {
        let h = self.effective(context);
        if k > self.top_cache {
            return self.compute_top(h, k);
        }
        if let Some(hit) = self.memo.read().unwrap_or_else(|e| e.into_inner()).get(h) {
            return hit[..k.min(hit.len())].to_vec();
        }
        let list: TopList = self.compute_top(h, self.top_cache).into();
        let out = list[..k.min(list.len())].to_vec();
        self.memo.write().unwrap_or_else(|e| e.into_inner()).insert(h.to_vec(), list);
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let mut contexts: Vec<(Vec<u32>, Vec<(u32, u64)>)> =
            self.contexts.iter().map(|(h, c)| (h.clone(), c.next.clone())).collect();
        contexts.sort();
        let file = LmFile {
            format: LM_FORMAT.into(),
            order: self.order,
            discount: self.discount,
            vocab_size: self.vocab,
            top_cache: self.top_cache,
            unigram: self.unigram.clone(),
            contexts,
        };
        Ok(serde_json::to_string(&file)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: LmFile = serde_json::from_str(text)?;
        if file.format != LM_FORMAT {
            return Err(Error::Model(format!("unknown LM format {:?}", file.format)));
        }
        if file.unigram.len() != file.vocab_size {
            return Err(Error::Model("unigram table does not match vocabulary size".into()));
        }
        let cfg = LmConfig {
            order: file.order,
            discount: file.discount,
            vocab_size: file.vocab_size,
            top_cache: file.top_cache,
        };
        cfg.validate()?;
        let contexts = file
            .contexts
            .into_iter()
            .map(|(h, next)| {
                let total = next.iter().map(|p| p.1).sum();
                (h, Context { total, next })
            })
            .collect();
        Ok(Self::assemble(&cfg, file.vocab_size, file.unigram, contexts))
    }
}

/// An LM bound to the tokenizer that produced its ids.
#[derive(Clone, Copy)]
pub struct LmQuery<'a> {
    pub lm: &'a LmModel,
    pub bpe: &'a BpeModel,
}

impl NextTokenModel for LmQuery<'_> {
    fn top_next(&self, context: &[u32], k: usize) -> Vec<(u32, f64)> {
        self.lm.top_next(context, k)
    }

    fn logprob(&self, context: &[u32], token: u32) -> f64 {
        self.lm.prob(context, token).ln()
    }

    fn token_text(&self, token: u32) -> &str {
        self.bpe.token_text(token).unwrap_or("")
    }

    fn consistent_tokens(&self, pending: &str) -> Vec<u32> {
        self.bpe.tokens_consistent_with(pending)
    }
}

#[derive(Debug, Clone)]
struct CacheEntry {
    line: String,
    /// completions after the cursor with their log-probabilities
    results: Vec<(String, f64)>,
}

/// Bytes before the line start that identify the line together with its
/// offset.
const KEY_BYTES: usize = 256;

/// Results of earlier queries on the current line.
#[derive(Debug, Clone, Default)]
pub struct LineCache {
    key: Option<(usize, u64)>,
    entries: Vec<CacheEntry>,
    pub hits: usize,
    pub misses: usize,
}

impl LineCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn sync(&mut self, context: &str, line_start: usize) {
        let mut from = line_start.saturating_sub(KEY_BYTES);
        while !context.is_char_boundary(from) {
            from += 1;
        }
        let key = (line_start, fnv1a(context[from..line_start].as_bytes()));
        if self.key != Some(key) {
            self.key = Some(key);
            self.entries.clear();
        }
    }

    fn exact(&self, line: &str) -> Option<&CacheEntry> {
        self.entries.iter().find(|e| e.line == line)
    }

    /// Cached completions of an earlier point on this line, trimmed by the
    /// characters typed since and filtered to those still consistent.
    fn extend(&self, line: &str) -> Option<Vec<(String, f64)>> {
        let entry = self
            .entries
            .iter()
            .filter(|e| line.starts_with(e.line.as_str()))
            .max_by_key(|e| e.line.len())?;
        let typed = &line[entry.line.len()..];
        let kept: Vec<(String, f64)> = entry
            .results
            .iter()
            .filter(|(t, _)| t.len() > typed.len() && t.starts_with(typed))
            .map(|(t, lp)| (t[typed.len()..].to_string(), *lp))
            .collect();
        (!kept.is_empty()).then_some(kept)
    }
}

#[derive(Debug, Clone, Default)]
pub struct LmOutcome {
    pub candidates: Vec<Candidate>,
    pub evaluations: usize,
    pub cache_hit: bool,
    pub timed_out: bool,
}

/// Characters of the context kept for encoding; the model sees at most
/// `order - 1` ids anyway.
const TAIL_CHARS: usize = 512;

fn tail_start(context: &str) -> usize {
    if context.len() <= TAIL_CHARS {
        return 0;
    }
    let mut at = context.len() - TAIL_CHARS;
    while !context.is_char_boundary(at) {
        at += 1;
    }
    match context[at..].find('\n') {
        Some(nl) if at + nl + 1 < context.len() => at + nl + 1,
        _ => at,
    }
}

fn search(lm: &LmModel, bpe: &BpeModel, context: &str, cfg: &BeamConfig, deadline: Option<std::time::Instant>) -> (Vec<(String, f64)>, usize, bool) {
    let start = tail_start(context);
    let words = bpe_words(&context[start..]);
    let (pending, committed) = match words.split_last() {
        Some((last, rest)) => (*last, rest),
        None => ("", &words[..]),
    };
    let keep = lm.order().saturating_sub(1);
    let from = committed.len().saturating_sub(keep);
    let mut ids = Vec::new();
    if start == 0 && from == 0 {
        ids.push(lm.bos());
    }
    for w in &committed[from..] {
        match bpe.encode_word(w) {
            Ok(enc) => ids.extend(enc),
            Err(_) => return (Vec::new(), 0, false),
        }
    }
    if pending.chars().any(|c| bpe.token_id(c.encode_utf8(&mut [0; 4])).is_none()) {
        return (Vec::new(), 0, false);
    }
    let out = beam_search_until(&LmQuery { lm, bpe }, &ids, pending, cfg, deadline);
    let results = out
        .hypotheses
        .iter()
        .map(|h| (h.text[pending.len()..].to_string(), h.logprob))
        .filter(|(t, _)| !t.is_empty())
        .take(CANDIDATE_CAP)
        .collect();
    (results, out.evaluations, out.timed_out)
}

fn to_candidates(results: &[(String, f64)], k: usize) -> Vec<Candidate> {
    results
        .iter()
        .take(k)
        .enumerate()
        .map(|(i, (t, lp))| Candidate::new(t.clone(), LM, i + 1).with_score(DIM_LM_LOGPROB, *lp))
        .collect()
}

/// Line completions for the text before the cursor. The final pre-token
/// word before the cursor is treated as an unfinished prefix the generated
/// text must spell out first.
///
/// With a time budget of 0 the cache only answers exact repeats, which keeps
/// results identical to uncached runs. With a budget, results computed
/// earlier on the same line are reused for any still-consistent suffix.
pub fn lm_query(lm: &LmModel, bpe: &BpeModel, context: &str, cfg: &BeamConfig, k: usize, cache: Option<&mut LineCache>) -> LmOutcome {
    let deadline = (cfg.time_budget_ms > 0)
        .then(|| std::time::Instant::now() + std::time::Duration::from_millis(cfg.time_budget_ms));
    lm_query_until(lm, bpe, context, cfg, k, cache, deadline)
}

pub fn lm_query_until(
    lm: &LmModel,
    bpe: &BpeModel,
    context: &str,
    cfg: &BeamConfig,
    k: usize,
    cache: Option<&mut LineCache>,
    deadline: Option<std::time::Instant>,
) -> LmOutcome {
    let k = k.min(CANDIDATE_CAP);
    let Some(cache) = cache else {
        let (results, evaluations, timed_out) = search(lm, bpe, context, cfg, deadline);
        return LmOutcome {
            candidates: to_candidates(&results, k),
            evaluations,
            cache_hit: false,
            timed_out,
        };
    };
    let line_start = context.rfind('\n').map_or(0, |i| i + 1);
    cache.sync(context, line_start);
    let line = &context[line_start..];
    if let Some(candidates) = cache.exact(line).map(|e| to_candidates(&e.results, k)) {
        cache.hits += 1;
        return LmOutcome {
            candidates,
            evaluations: 0,
            cache_hit: true,
            timed_out: false,
        };
    }
    if cfg.time_budget_ms > 0 || deadline.is_some() {
        if let Some(results) = cache.extend(line) {
            cache.hits += 1;
            let candidates = to_candidates(&results, k);
            cache.entries.push(CacheEntry {
                line: line.to_string(),
                results,
            });
            return LmOutcome {
                candidates,
                evaluations: 0,
                cache_hit: true,
                timed_out: false,
            };
        }
    }
    cache.misses += 1;
    let (results, evaluations, timed_out) = search(lm, bpe, context, cfg, deadline);
    let candidates = to_candidates(&results, k);
    cache.entries.push(CacheEntry {
        line: line.to_string(),
        results,
    });
    LmOutcome {
        candidates,
        evaluations,
        cache_hit: false,
        timed_out,
    }
}
