//! Built strategies plus the per-file session state that queries them.

use serde::{Deserialize, Serialize};

use super::beam::BeamConfig;
use super::external::{ExternalSpec, ExternalStrategy};
use super::global::TrieIndex;
use super::lm::{lm_query, LineCache, LmModel, LmTrigger};
use super::local::LocalFrequency;
use super::{merge_candidates, Candidate, CANDIDATE_CAP, GLOBAL, LM, LOCAL};
use crate::error::{Error, Result};
use crate::lexer::BpeModel;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StrategyToggles {
    pub global: bool,
    pub local: bool,
    pub lm: bool,
}

impl Default for StrategyToggles {
    fn default() -> Self {
        StrategyToggles {
            global: true,
            local: true,
            lm: true,
        }
    }
}

impl StrategyToggles {
    pub fn only(strategy: &str) -> Self {
        StrategyToggles {
            global: strategy == GLOBAL,
            local: strategy == LOCAL,
            lm: strategy == LM,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EngineConfig {
    pub toggles: StrategyToggles,
    /// Candidates taken from each strategy; at most five.
    pub cap: usize,
    /// Trailing characters of the file handed to external strategies.
    pub context_window: usize,
    pub beam: BeamConfig,
    pub lm_trigger: LmTrigger,
    pub line_cache: bool,
    pub external: Vec<ExternalSpec>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            toggles: StrategyToggles::default(),
            cap: CANDIDATE_CAP,
            context_window: 2048,
            beam: BeamConfig::default(),
            lm_trigger: LmTrigger::default(),
            line_cache: true,
            external: Vec::new(),
        }
    }
}

impl EngineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cap == 0 || self.cap > CANDIDATE_CAP {
            return Err(Error::Config(format!("strategy cap must be in 1..={CANDIDATE_CAP}")));
        }
        if self.context_window == 0 {
            return Err(Error::Config("context_window must be positive".into()));
        }
        self.beam.validate()
    }
}

/// Immutable, shareable strategy models.
#[derive(Debug, Default)]
pub struct Strategies {
    pub trie: Option<TrieIndex>,
    pub bpe: Option<BpeModel>,
    pub lm: Option<LmModel>,
}

impl Strategies {
    pub fn session(&self, cfg: &EngineConfig) -> Result<Session<'_>> {
        cfg.validate()?;
        let externals = cfg.external.iter().map(ExternalStrategy::spawn).collect::<Result<Vec<_>>>()?;
        Ok(Session {
            models: self,
            cfg: cfg.clone(),
            local: LocalFrequency::new(),
            cache: LineCache::new(),
            externals,
            lm_evaluations: 0,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Gathered {
    /// Strategy id and its own list, in a fixed strategy order.
    pub per_strategy: Vec<(String, Vec<Candidate>)>,
    pub merged: Vec<Candidate>,
}

/// Mutable state for one file being typed: local counts, the LM line
/// cache and external clients.
pub struct Session<'a> {
    models: &'a Strategies,
    cfg: EngineConfig,
    local: LocalFrequency,
    cache: LineCache,
    externals: Vec<ExternalStrategy>,
    pub lm_evaluations: usize,
}

fn window(context: &str, chars: usize) -> &str {
    if context.len() <= chars {
        return context;
    }
    let mut at = context.len() - chars;
    while !context.is_char_boundary(at) {
        at += 1;
    }
    &context[at..]
}

impl Session<'_> {
    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    /// Queries every enabled strategy for the text before the cursor.
    pub fn query(&mut self, context: &str) -> Result<Gathered> {
        let cap = self.cfg.cap;
        let mut per_strategy = Vec::new();
        if self.cfg.toggles.global {
            if let Some(trie) = &self.models.trie {
                per_strategy.push((GLOBAL.to_string(), trie.query_context(context, cap)));
            }
        }
        if self.cfg.toggles.local {
            per_strategy.push((LOCAL.to_string(), self.local.query_context(context, cap)));
        }
        if self.cfg.toggles.lm && self.cfg.lm_trigger.fires(context) {
            if let (Some(lm), Some(bpe)) = (&self.models.lm, &self.models.bpe) {
                let cache = self.cfg.line_cache.then_some(&mut self.cache);
                let out = lm_query(lm, bpe, context, &self.cfg.beam, cap, cache);
                self.lm_evaluations += out.evaluations;
                per_strategy.push((LM.to_string(), out.candidates));
            }
        }
        let tail = window(context, self.cfg.context_window);
        for ext in &mut self.externals {
            per_strategy.push((ext.id().to_string(), ext.query(tail, cap)));
        }
        let lists: Vec<Vec<Candidate>> = per_strategy.iter().map(|(_, l)| l.clone()).collect();
        let merged = merge_candidates(&lists)?;
        Ok(Gathered { per_strategy, merged })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::WordStats;

    fn models() -> Strategies {
        let stats = WordStats {
            count: 4,
            file_count: 2,
            project_count: 2,
        };
        Strategies {
            trie: Some(TrieIndex::from_words([("Entries".to_string(), stats)])),
            bpe: None,
            lm: None,
        }
    }

    #[test]
    fn merges_across_strategies() {
        let m = models();
        let mut s = m.session(&EngineConfig::default()).unwrap();
        let text = "List<Entry> defaultEntries; default";
        let g = s.query(&format!("{text}Entr")).unwrap();
        assert!(g.per_strategy.iter().any(|(id, l)| id == GLOBAL && l[0].text == "ies"));
        // "defaultEntries" was counted locally; completion is from "default"
        let g = s.query(text).unwrap();
        assert!(g.merged.iter().any(|c| c.text == "Entries"));
    }

    #[test]
    fn toggles_disable_strategies() {
        let m = models();
        let cfg = EngineConfig {
            toggles: StrategyToggles::only(LOCAL),
            ..EngineConfig::default()
        };
        let mut s = m.session(&cfg).unwrap();
        let g = s.query("Entr").unwrap();
        assert_eq!(g.per_strategy.len(), 1);
        assert!(g.merged.is_empty());
    }

    #[test]
    fn bad_cap_rejected() {
        let cfg = EngineConfig {
            cap: 6,
            ..EngineConfig::default()
        };
        assert!(models().session(&cfg).is_err());
    }
}
