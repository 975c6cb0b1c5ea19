//! Beam search with threshold pruning and a shrinking batch.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A conditional next-token model over integer token ids.
pub trait NextTokenModel {
    /// Up to `k` most likely next tokens, best first, ties by lower id.
    fn top_next(&self, context: &[u32], k: usize) -> Vec<(u32, f64)>;
    fn logprob(&self, context: &[u32], token: u32) -> f64;
    fn token_text(&self, token: u32) -> &str;
    /// Tokens allowed as the next step while `pending` is still unspelled.
    fn consistent_tokens(&self, pending: &str) -> Vec<u32>;
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BeamConfig {
    pub k: usize,
    /// Sequences whose aggregate log-probability falls below this are cut.
    pub threshold: f64,
    pub max_steps: usize,
    /// 0 means unlimited.
    pub time_budget_ms: u64,
}

impl Default for BeamConfig {
    fn default() -> Self {
        BeamConfig {
            k: 5,
            threshold: -3.0,
            max_steps: 10,
            time_budget_ms: 0,
        }
    }
}

impl BeamConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::Config("beam.k must be at least 1".into()));
        }
        if self.max_steps == 0 {
            return Err(Error::Config("beam.max_steps must be at least 1".into()));
        }
        if self.threshold.is_nan() || self.threshold > 0.0 {
            return Err(Error::Config("beam.threshold must be a non-positive number".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// every continuation fell below the threshold; the sequence itself did not
    BelowThreshold,
    EndOfLine,
    MaxSteps,
    /// the time budget ran out while the sequence was still live
    Budget,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub tokens: Vec<u32>,
    /// Decoded text of `tokens`, including any pending prefix it spells.
    pub text: String,
    pub logprob: f64,
    pub termination: Termination,
}

#[derive(Debug, Clone, Default)]
pub struct BeamOutput {
    /// Best first, one per distinct text.
    pub hypotheses: Vec<Hypothesis>,
    /// Model evaluations after the context prefill; equals the sum of
    /// `batch_sizes`.
    pub evaluations: usize,
    pub batch_sizes: Vec<usize>,
    pub timed_out: bool,
}

#[derive(Clone)]
struct Live {
    tokens: Vec<u32>,
    text: String,
    logprob: f64,
}

fn by_score(a: &(usize, u32, f64), b: &(usize, u32, f64)) -> Ordering {
    b.2.total_cmp(&a.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1))
}

fn opens_comment(text: &str) -> bool {
    text.contains("//") || text.contains("/*") || text.contains('#')
}

/// True when the last four tokens repeat an earlier four-token window.
fn closes_loop(tokens: &[u32]) -> bool {
    const M: usize = 4;
    if tokens.len() <= M {
        return false;
    }
    let tail = &tokens[tokens.len() - M..];
    tokens.windows(M).take(tokens.len() - M).any(|w| w == tail)
}

fn expand<M: NextTokenModel + ?Sized>(
    model: &M,
    context: &[u32],
    beam: &Live,
    pending: &str,
    k: usize,
    buf: &mut Vec<u32>,
) -> Vec<(u32, f64)> {
    buf.clear();
    buf.extend_from_slice(context);
    buf.extend_from_slice(&beam.tokens);
    if beam.text.len() >= pending.len() {
        return model.top_next(buf, k);
    }
    let rest = &pending[beam.text.len()..];
    let mut scored: Vec<(u32, f64)> = model
        .consistent_tokens(rest)
        .into_iter()
        .map(|t| (t, model.logprob(buf, t)))
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    scored.truncate(k);
    scored
}

pub fn beam_search<M: NextTokenModel + ?Sized>(model: &M, context: &[u32], pending: &str, cfg: &BeamConfig) -> BeamOutput {
    let deadline = (cfg.time_budget_ms > 0).then(|| Instant::now() + Duration::from_millis(cfg.time_budget_ms));
    beam_search_until(model, context, pending, cfg, deadline)
}

/// Beam search that stops at `deadline` and returns the best sequences
/// found so far. Every sequence must first spell out `pending`; a sequence
/// is only returned once its text extends past it.
pub fn beam_search_until<M: NextTokenModel + ?Sized>(
    model: &M,
    context: &[u32],
    pending: &str,
    cfg: &BeamConfig,
    deadline: Option<Instant>,
) -> BeamOutput {
    let mut out = BeamOutput::default();
    if cfg.k == 0 || cfg.max_steps == 0 {
        return out;
    }
    let usable = |text: &str| text.len() > pending.len();
    let mut finished: Vec<Hypothesis> = Vec::new();
    let mut beams = vec![Live {
        tokens: Vec::new(),
        text: String::new(),
        logprob: 0.0,
    }];
    let mut buf = Vec::with_capacity(context.len() + cfg.max_steps);
    for step in 1..=cfg.max_steps {
        if step > 1 {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                out.timed_out = true;
                for b in beams.drain(..).filter(|b| usable(&b.text)) {
                    finished.push(Hypothesis {
                        tokens: b.tokens,
                        text: b.text,
                        logprob: b.logprob,
                        termination: Termination::Budget,
                    });
                }
                break;
            }
            out.evaluations += beams.len();
            out.batch_sizes.push(beams.len());
        }
        let mut expansions: Vec<(usize, u32, f64)> = Vec::new();
        for (bi, beam) in beams.iter().enumerate() {
            for (tok, lp) in expand(model, context, beam, pending, cfg.k, &mut buf) {
                expansions.push((bi, tok, beam.logprob + lp.min(0.0)));
            }
        }
        expansions.sort_by(by_score);
        expansions.truncate(cfg.k);

        let mut kept_child = vec![false; beams.len()];
        let mut cut_child = vec![false; beams.len()];
        let mut next = Vec::new();
        for &(bi, tok, score) in &expansions {
            if score < cfg.threshold {
                cut_child[bi] = true;
                continue;
            }
            let parent = &beams[bi];
            let piece = model.token_text(tok);
            let mut text = String::with_capacity(parent.text.len() + piece.len());
            text.push_str(&parent.text);
            text.push_str(piece);
            let mut tokens = parent.tokens.clone();
            tokens.push(tok);
            let generated = text.get(pending.len().min(text.len())..).unwrap_or("");
            if opens_comment(generated) {
                continue;
            }
            let termination = if piece.contains('\n') {
                Some(Termination::EndOfLine)
            } else if closes_loop(&tokens) {
                continue;
            } else if step == cfg.max_steps {
                Some(Termination::MaxSteps)
            } else {
                None
            };
            kept_child[bi] = true;
            match termination {
                Some(termination) => {
                    if usable(&text) {
                        finished.push(Hypothesis {
                            tokens,
                            text,
                            logprob: score,
                            termination,
                        });
                    }
                }
                None => next.push(Live { tokens, text, logprob: score }),
            }
        }
        for (bi, beam) in beams.iter().enumerate() {
            if cut_child[bi] && !kept_child[bi] && usable(&beam.text) {
                finished.push(Hypothesis {
                    tokens: beam.tokens.clone(),
                    text: beam.text.clone(),
                    logprob: beam.logprob,
                    termination: Termination::BelowThreshold,
                });
            }
        }
        beams = next;
        if beams.is_empty() {
            break;
        }
    }
    finished.sort_by(|a, b| b.logprob.total_cmp(&a.logprob).then_with(|| a.text.cmp(&b.text)));
    let mut seen = std::collections::HashSet::new();
    finished.retain(|h| seen.insert(h.text.clone()));
    out.hypotheses = finished;
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use std::collections::HashMap;

    /// Model given by a table from the last token to a next-token
    /// distribution; unknown contexts use `fallback`.
    pub(crate) struct TableModel {
        pub texts: Vec<String>,
        pub table: HashMap<u32, Vec<(u32, f64)>>,
        pub fallback: Vec<(u32, f64)>,
    }

    impl TableModel {
        fn dist(&self, context: &[u32]) -> &[(u32, f64)] {
            context
                .last()
                .and_then(|t| self.table.get(t))
                .map(|v| v.as_slice())
                .unwrap_or(&self.fallback)
        }
    }

    impl NextTokenModel for TableModel {
        fn top_next(&self, context: &[u32], k: usize) -> Vec<(u32, f64)> {
            let mut d = self.dist(context).to_vec();
            d.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
            d.truncate(k);
            d
        }
        fn logprob(&self, context: &[u32], token: u32) -> f64 {
            self.dist(context)
                .iter()
                .find(|(t, _)| *t == token)
                .map(|p| p.1)
                .unwrap_or(-50.0)
        }
        fn token_text(&self, token: u32) -> &str {
            &self.texts[token as usize]
        }
        fn consistent_tokens(&self, pending: &str) -> Vec<u32> {
            (0..self.texts.len() as u32)
                .filter(|&t| {
                    let s = &self.texts[t as usize];
                    s.starts_with(pending) || (pending.starts_with(s.as_str()) && s.len() < pending.len())
                })
                .collect()
        }
    }

    fn ln(p: f64) -> f64 {
        p.ln()
    }

    /// Five first tokens all above the threshold; only two of them have a
    /// strong continuation, which they keep following.
    fn dynamic_batch_model() -> TableModel {
        // 0..5: a b c d e; 5..15: a chain x0 -> x1 -> ... -> x9; 15: context
        let mut texts: Vec<String> = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
        texts.extend((0..10).map(|i| format!("x{i}")));
        texts.push("<s>".into());
        let mut table = HashMap::new();
        table.insert(15, vec![(0, ln(0.2)), (1, ln(0.2)), (2, ln(0.2)), (3, ln(0.2)), (4, ln(0.19))]);
        table.insert(0, vec![(5, ln(0.97)), (6, -8.0)]);
        table.insert(1, vec![(5, ln(0.97)), (6, -8.0)]);
        for t in 2..5 {
            table.insert(t, vec![(5, -6.0), (6, -6.5)]);
        }
        for t in 5..14 {
            table.insert(t, vec![(t + 1, ln(0.97)), (0, -8.0)]);
        }
        TableModel {
            texts,
            table,
            fallback: vec![],
        }
    }

    #[test]
    fn dynamic_batch_counts() {
        let model = dynamic_batch_model();
        let cfg = BeamConfig {
            k: 5,
            threshold: -3.0,
            max_steps: 11,
            time_budget_ms: 0,
        };
        let out = beam_search(&model, &[15], "", &cfg);
        assert_eq!(out.batch_sizes, [5, 2, 2, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(out.evaluations, 5 + 2 * 9);
        assert!(out.evaluations < cfg.k * (cfg.max_steps - 1));
        let long: Vec<_> = out.hypotheses.iter().filter(|h| h.termination == Termination::MaxSteps).collect();
        assert_eq!(long.len(), 2);
        assert!(long.iter().all(|h| h.tokens.len() == 11));
    }

    #[test]
    fn all_first_steps_below_threshold() {
        let model = TableModel {
            texts: vec!["a".into(), "b".into()],
            table: HashMap::new(),
            fallback: vec![(0, -4.0), (1, -5.0)],
        };
        let out = beam_search(&model, &[0], "", &BeamConfig::default());
        assert!(out.hypotheses.is_empty());
        assert_eq!(out.evaluations, 0);
    }

    #[test]
    fn newline_first_gives_single_tokens() {
        let model = TableModel {
            texts: vec![";\n".into(), "x".into()],
            table: HashMap::new(),
            fallback: vec![(0, -0.01), (1, -5.0)],
        };
        let out = beam_search(&model, &[1], "", &BeamConfig::default());
        assert!(!out.hypotheses.is_empty());
        assert!(out.hypotheses.iter().all(|h| h.tokens.len() == 1));
    }

    #[test]
    fn comment_and_loop_are_dropped() {
        let model = TableModel {
            texts: vec!["//".into(), "a".into()],
            table: HashMap::new(),
            fallback: vec![(0, -0.01), (1, -0.02)],
        };
        let cfg = BeamConfig {
            k: 1,
            threshold: -10.0,
            max_steps: 10,
            time_budget_ms: 0,
        };
        let out = beam_search(&model, &[1], "", &cfg);
        assert!(out.hypotheses.is_empty());
        assert!(closes_loop(&[1, 1, 1, 1, 1]));
        assert!(closes_loop(&[1, 2, 3, 4, 9, 1, 2, 3, 4]));
        assert!(!closes_loop(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn pending_prefix_is_spelled_first() {
        let model = TableModel {
            texts: vec!["re".into(), "sult".into(), "turn".into(), "result".into(), "x".into()],
            table: HashMap::new(),
            fallback: vec![(0, -0.5), (1, -0.6), (2, -0.7), (3, -1.0), (4, -0.1)],
        };
        let cfg = BeamConfig {
            k: 5,
            threshold: -2.5,
            max_steps: 2,
            time_budget_ms: 0,
        };
        let out = beam_search(&model, &[4], "res", &cfg);
        assert!(!out.hypotheses.is_empty());
        for h in &out.hypotheses {
            assert!(h.text.starts_with("res") && h.text.len() > 3, "{}", h.text);
        }
    }

    #[test]
    fn expired_deadline_returns_first_step() {
        let model = dynamic_batch_model();
        let cfg = BeamConfig {
            k: 5,
            threshold: -3.0,
            max_steps: 11,
            time_budget_ms: 0,
        };
        let out = beam_search_until(&model, &[15], "", &cfg, Some(Instant::now()));
        assert!(out.timed_out);
        assert_eq!(out.evaluations, 0);
        assert_eq!(out.hypotheses.len(), 5);
        assert!(out.hypotheses.iter().all(|h| h.termination == Termination::Budget));
    }

    pub(crate) fn random_model(rng: &mut impl Rng) -> TableModel {
        let n = rng.gen_range(3..9);
        let mut texts: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
        texts.push("\n".into());
        texts.push("#".into());
        let v = texts.len() as u32;
        let mut table: HashMap<u32, Vec<(u32, f64)>> = HashMap::new();
        for t in 0..v {
            let mut weights: Vec<f64> = (0..v).map(|_| rng.gen::<f64>().powi(3) + 1e-3).collect();
            let sum: f64 = weights.iter().sum();
            weights.iter_mut().for_each(|w| *w = (*w / sum).ln());
            table.insert(t, weights.into_iter().enumerate().map(|(i, w)| (i as u32, w)).collect());
        }
        TableModel {
            texts,
            fallback: table[&0].clone(),
            table,
        }
    }

    pub(crate) fn check_contract(out: &BeamOutput, cfg: &BeamConfig) {
        assert_eq!(out.evaluations, out.batch_sizes.iter().sum::<usize>());
        assert!(out.evaluations <= cfg.k * cfg.max_steps);
        assert!(out.batch_sizes.iter().all(|&b| b <= cfg.k));
        for h in &out.hypotheses {
            assert!(h.logprob >= cfg.threshold);
            assert!(h.logprob <= 0.0);
            assert!(!h.tokens.is_empty() && h.tokens.len() <= cfg.max_steps);
            assert!(!opens_comment(&h.text));
            match h.termination {
                Termination::EndOfLine => assert!(h.text.ends_with('\n')),
                Termination::MaxSteps => assert_eq!(h.tokens.len(), cfg.max_steps),
                Termination::BelowThreshold | Termination::Budget => {}
            }
        }
    }

    #[test]
    fn random_models_keep_contract() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let model = random_model(&mut rng);
            let cfg = BeamConfig {
                k: rng.gen_range(1..6),
                threshold: -rng.gen_range(0.5..8.0),
                max_steps: rng.gen_range(1..12),
                time_budget_ms: 0,
            };
            let out = beam_search(&model, &[0], "", &cfg);
            check_contract(&out, &cfg);
        }
    }
}
