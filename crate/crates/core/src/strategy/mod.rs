//! Completion strategies and the candidate type they share.
//!
//! Each strategy proposes up to a handful of completions for the text before
//! the cursor. Scores are tagged with strategy-scoped dimension names so the
//! lists can be merged without collisions.

mod beam;
mod engine;
mod external;
mod global;
mod lm;
mod local;

pub use beam::{beam_search, beam_search_until, BeamConfig, BeamOutput, Hypothesis, NextTokenModel, Termination};
pub use engine::{EngineConfig, Gathered, Session, Strategies, StrategyToggles};
pub use external::{ExternalSpec, ExternalStrategy};
pub use global::{subtoken_stats, token_vocabulary_size, GlobalConfig, RareFilter, TrieIndex, WordStats};
pub use lm::{lm_query, lm_query_until, LineCache, LmConfig, LmModel, LmOutcome, LmQuery, LmTrigger};
pub use local::LocalFrequency;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const GLOBAL: &str = "global";
pub const LOCAL: &str = "local";
pub const LM: &str = "lm";

pub const DIM_GLOBAL_COUNT: &str = "global_count";
pub const DIM_GLOBAL_FILE_COUNT: &str = "global_file_count";
pub const DIM_GLOBAL_PROJECT_COUNT: &str = "global_project_count";
pub const DIM_LOCAL_COUNT: &str = "local_count";
pub const DIM_LM_LOGPROB: &str = "lm_logprob";

/// Maximum candidates any one strategy contributes.
pub const CANDIDATE_CAP: usize = 5;

/// The score dimension a strategy sorts its own list by.
pub fn primary_dimension(strategy: &str) -> Option<&'static str> {
    match strategy {
        GLOBAL => Some(DIM_GLOBAL_COUNT),
        LOCAL => Some(DIM_LOCAL_COUNT),
        LM => Some(DIM_LM_LOGPROB),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    /// Characters proposed after the cursor; never empty.
    pub text: String,
    /// Strategy id -> 1-based rank within that strategy's own list.
    pub strategies: BTreeMap<String, usize>,
    pub scores: BTreeMap<String, f64>,
}

impl Candidate {
    pub fn new(text: impl Into<String>, strategy: &str, rank: usize) -> Self {
        let text = text.into();
        debug_assert!(!text.is_empty());
        Candidate {
            text,
            strategies: BTreeMap::from([(strategy.to_string(), rank)]),
            scores: BTreeMap::new(),
        }
    }

    pub fn with_score(mut self, dim: &str, value: f64) -> Self {
        self.scores.insert(dim.to_string(), value);
        self
    }

    /// Length in characters.
    pub fn len(&self) -> usize {
        self.text.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn best_rank(&self) -> usize {
        self.strategies.values().copied().min().unwrap_or(usize::MAX)
    }

    pub fn score(&self, dim: &str) -> Option<f64> {
        self.scores.get(dim).copied()
    }
}

/// Unifies candidates with identical text across strategy lists, taking the
/// union of their score dimensions and provenance. The output is ordered by
/// best per-strategy rank, then text, so it does not depend on list order.
pub fn merge_candidates(lists: &[Vec<Candidate>]) -> Result<Vec<Candidate>> {
    let mut by_text: BTreeMap<&str, Candidate> = BTreeMap::new();
    for cand in lists.iter().flatten() {
        let Some(merged) = by_text.get_mut(cand.text.as_str()) else {
            by_text.insert(&cand.text, cand.clone());
            continue;
        };
        for (dim, &v) in &cand.scores {
            match merged.scores.get(dim) {
                Some(&old) if old.to_bits() != v.to_bits() => {
                    return Err(Error::ScoreConflict {
                        dimension: dim.clone(),
                        text: cand.text.clone(),
                    })
                }
                _ => {
                    merged.scores.insert(dim.clone(), v);
                }
            }
        }
        for (s, &r) in &cand.strategies {
            let slot = merged.strategies.entry(s.clone()).or_insert(r);
            *slot = (*slot).min(r);
        }
    }
    let mut out: Vec<Candidate> = by_text.into_values().collect();
    out.sort_by(|a, b| a.best_rank().cmp(&b.best_rank()).then_with(|| a.text.cmp(&b.text)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shared_candidate_unifies_scores() {
        let global = vec![Candidate::new("DefaultEntries", GLOBAL, 2).with_score(DIM_GLOBAL_COUNT, 40.0)];
        let lm = vec![
            Candidate::new("DefaultEntries", LM, 1).with_score(DIM_LM_LOGPROB, -0.7),
            Candidate::new("DefaultEntries();", LM, 2).with_score(DIM_LM_LOGPROB, -1.9),
        ];
        let merged = merge_candidates(&[global, lm]).unwrap();
        assert_eq!(merged.len(), 2);
        let c = &merged[0];
        assert_eq!(c.text, "DefaultEntries");
        assert_eq!(c.strategies.len(), 2);
        assert_eq!(c.score(DIM_GLOBAL_COUNT), Some(40.0));
        assert_eq!(c.score(DIM_LM_LOGPROB), Some(-0.7));
    }

    #[test]
    fn disjoint_and_empty() {
        let a = vec![Candidate::new("a", LOCAL, 1)];
        let b = vec![Candidate::new("b", GLOBAL, 2)];
        let merged = merge_candidates(&[a, b]).unwrap();
        assert_eq!(merged.iter().map(|c| c.text.as_str()).collect::<Vec<_>>(), ["a", "b"]);
        assert!(merge_candidates(&[]).unwrap().is_empty());
        assert!(merge_candidates(&[vec![], vec![]]).unwrap().is_empty());
    }

    #[test]
    fn conflicting_dimension_rejected() {
        let a = vec![Candidate::new("x", LOCAL, 1).with_score(DIM_LOCAL_COUNT, 1.0)];
        let b = vec![Candidate::new("x", LOCAL, 1).with_score(DIM_LOCAL_COUNT, 2.0)];
        assert!(matches!(merge_candidates(&[a, b]), Err(Error::ScoreConflict { .. })));
    }

    fn arb_list(strategy: &'static str, dim: &'static str) -> impl Strategy<Value = Vec<Candidate>> {
        proptest::collection::btree_set("[a-d]{1,3}", 0..5).prop_map(move |texts| {
            texts
                .into_iter()
                .enumerate()
                .map(|(i, t)| {
                    let score = t.len() as f64 * 10.0 + t.as_bytes()[0] as f64;
                    Candidate::new(t, strategy, i + 1).with_score(dim, score)
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn merge_is_order_insensitive_and_idempotent(
            a in arb_list(GLOBAL, DIM_GLOBAL_COUNT),
            b in arb_list(LOCAL, DIM_LOCAL_COUNT),
            c in arb_list(LM, DIM_LM_LOGPROB),
        ) {
            let abc = merge_candidates(&[a.clone(), b.clone(), c.clone()]).unwrap();
            let cba = merge_candidates(&[c, b, a]).unwrap();
            prop_assert_eq!(&abc, &cba);
            prop_assert_eq!(merge_candidates(&[abc.clone()]).unwrap(), abc.clone());
            prop_assert_eq!(merge_candidates(&[abc.clone(), abc.clone()]).unwrap(), abc);
        }
    }
}
