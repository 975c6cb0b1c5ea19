//! The run configuration: one TOML file drives every subcommand.

use std::fs;
use std::path::{Path, PathBuf};

use cce::corpus::{IngestOptions, PreprocessConfig};
use cce::ensemble::PipelineConfig;
use cce::learn::GbdtParams;
use cce::strategy::{BeamConfig, EngineConfig, ExternalSpec, GlobalConfig, LmConfig, LmTrigger, StrategyToggles};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Paths {
    pub corpus: PathBuf,
    pub build: PathBuf,
    pub models: PathBuf,
    pub reports: PathBuf,
}

impl Default for Paths {
    fn default() -> Self {
        Paths {
            corpus: "data/toy_corpus".into(),
            build: "build".into(),
            models: "build/models".into(),
            reports: "build/reports".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSection {
    pub extensions: Vec<String>,
    /// train, simulation, test
    pub ratios: [f64; 3],
}

impl Default for CorpusSection {
    fn default() -> Self {
        let d = IngestOptions::default();
        CorpusSection {
            extensions: d.extensions,
            ratios: d.ratios,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EngineSection {
    pub cap: usize,
    pub context_window: usize,
    pub line_cache: bool,
    pub lm_trigger: LmTrigger,
}

impl Default for EngineSection {
    fn default() -> Self {
        let d = EngineConfig::default();
        EngineSection {
            cap: d.cap,
            context_window: d.context_window,
            line_cache: d.line_cache,
            lm_trigger: d.lm_trigger,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GbdtSection {
    pub acceptance: GbdtParams,
    pub ranking: GbdtParams,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AcceptanceSection {
    pub include_empty: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub workers: usize,
    pub paths: Paths,
    pub corpus: CorpusSection,
    pub preprocess: PreprocessConfig,
    pub strategies: StrategyToggles,
    pub global: GlobalConfig,
    pub lm: LmConfig,
    pub engine: EngineSection,
    pub beam: BeamConfig,
    pub pipeline: PipelineConfig,
    pub gbdt: GbdtSection,
    pub acceptance: AcceptanceSection,
    pub external: Vec<ExternalSpec>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            workers: 4,
            paths: Paths::default(),
            corpus: CorpusSection::default(),
            preprocess: PreprocessConfig::default(),
            strategies: StrategyToggles::default(),
            global: GlobalConfig::default(),
            lm: LmConfig::default(),
            engine: EngineSection::default(),
            beam: BeamConfig::default(),
            pipeline: PipelineConfig::default(),
            gbdt: GbdtSection::default(),
            acceptance: AcceptanceSection::default(),
            external: Vec::new(),
        }
    }
}

impl RunConfig {
    /// Parses and validates a config file. Relative paths are resolved
    /// against the file's directory.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text =
            fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&text, base)
    }

    pub fn parse(text: &str, base: &Path) -> Result<Self, CliError> {
        let mut cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        for p in [
            &mut cfg.paths.corpus,
            &mut cfg.paths.build,
            &mut cfg.paths.models,
            &mut cfg.paths.reports,
        ] {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.workers == 0 {
            return Err(CliError::Config("workers must be at least 1".into()));
        }
        if self.corpus.extensions.is_empty() {
            return Err(CliError::Config("corpus.extensions is empty".into()));
        }
        let r = self.corpus.ratios;
        if r.iter().any(|x| !(*x >= 0.0)) || (r.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
            return Err(CliError::Config("corpus.ratios must be non-negative and sum to 1".into()));
        }
        self.preprocess.validate()?;
        self.lm.validate()?;
        self.engine().validate()?;
        self.pipeline.validate()?;
        self.gbdt.acceptance.validate()?;
        self.gbdt.ranking.validate()?;
        Ok(())
    }

    pub fn ingest_options(&self) -> IngestOptions {
        IngestOptions {
            extensions: self.corpus.extensions.clone(),
            ratios: self.corpus.ratios,
            seed: self.seed,
            preprocess: self.preprocess.clone(),
        }
    }

    pub fn engine(&self) -> EngineConfig {
        EngineConfig {
            toggles: self.strategies.clone(),
            cap: self.engine.cap,
            context_window: self.engine.context_window,
            beam: self.beam.clone(),
            lm_trigger: self.engine.lm_trigger,
            line_cache: self.engine.line_cache,
            external: self.external.clone(),
        }
    }
}

const KEY_DOCS: &[(&str, &str)] = &[
    ("seed", "seed for the corpus split and the simulation pool"),
    ("workers", "simulation worker threads; output does not depend on it"),
    ("paths.corpus", "root directory of the source corpus, one subdirectory per project"),
    ("paths.build", "corpus, strategy and sample-store artifacts plus the digest manifest"),
    ("paths.models", "fitted acceptance, ranking and scaler models"),
    ("paths.reports", "metrics JSON, CSV tables and per-file cost spectra"),
    ("corpus.extensions", "file extensions to ingest"),
    ("corpus.ratios", "train, simulation and test shares of the files"),
    ("preprocess.string_len_threshold", "literals longer than this and rarer than the frequency threshold are replaced"),
    ("preprocess.string_freq_threshold", "training-split occurrence count below which a literal is rare"),
    ("preprocess.placeholder_string", "replacement for long rare string literals"),
    ("preprocess.placeholder_number", "replacement for long rare numeric literals"),
    ("preprocess.method_filtering", "cut getters, setters, tests and one-line methods from files"),
    ("strategies.global", "enable the corpus-wide sub-token trie"),
    ("strategies.local", "enable the in-file token frequency strategy"),
    ("strategies.lm", "enable the n-gram language model with beam search"),
    ("global.min_length", "sub-tokens shorter than this are rare candidates"),
    ("global.rare_filter", "\"and\": drop short single-project sub-tokens; \"or\": drop either"),
    ("lm.order", "n-gram order"),
    ("lm.discount", "absolute discount in (0, 1)"),
    ("lm.vocab_size", "BPE vocabulary size"),
    ("lm.top_cache", "memoized best continuations per context"),
    ("engine.cap", "candidates taken from each strategy, at most 5"),
    ("engine.context_window", "trailing characters sent to external strategies"),
    ("engine.line_cache", "reuse LM results while the cursor stays on one line"),
    ("engine.lm_trigger", "\"always\", \"identifier_prefix\" or \"never\""),
    ("beam.k", "beam width"),
    ("beam.threshold", "sequences whose log-probability drops below this are cut"),
    ("beam.max_steps", "maximum generated tokens"),
    ("beam.time_budget_ms", "per-request LM deadline, 0 for none"),
    ("pipeline.threshold", "acceptance threshold; lists with p below it are blocked"),
    ("pipeline.gate", "consult the acceptance model"),
    ("pipeline.mode", "\"fusion\", \"normalized\" or \"unranked\""),
    ("pipeline.cap", "length of the shown list, at most 5"),
    ("gbdt.acceptance.n_trees", "boosting rounds of the acceptance model"),
    ("gbdt.acceptance.max_depth", "tree depth"),
    ("gbdt.acceptance.learning_rate", "shrinkage"),
    ("gbdt.acceptance.min_samples_leaf", "minimum samples per leaf"),
    ("gbdt.acceptance.l2", "leaf weight regularization"),
    ("gbdt.acceptance.positive_weight", "positive class weight; unset means #neg/#pos"),
    ("gbdt.ranking.n_trees", "boosting rounds of the fusion ranker"),
    ("gbdt.ranking.max_depth", "tree depth"),
    ("gbdt.ranking.learning_rate", "shrinkage"),
    ("gbdt.ranking.min_samples_leaf", "minimum samples per leaf"),
    ("gbdt.ranking.l2", "leaf weight regularization"),
    ("gbdt.ranking.positive_weight", "unused by the squared-error objective"),
    ("acceptance.include_empty", "keep positions without candidates as negatives"),
    ("external", "array of tables: external strategies"),
    ("external.id", "strategy id; its score dimensions become <id>.<dim>"),
    ("external.command", "program and arguments speaking NDJSON over stdio"),
    ("external.timeout_ms", "per-request timeout"),
];

/// Every documented key, dotted.
pub fn documented_keys() -> impl Iterator<Item = &'static str> {
    KEY_DOCS.iter().map(|(k, _)| *k)
}

/// Help text for the keys under the given top-level names.
pub fn keys_help(sections: &[&str]) -> String {
    let defaults = toml::Value::try_from(RunConfig::default()).expect("default config serializes");
    let mut out = String::from("Config keys read:\n");
    for (key, doc) in KEY_DOCS {
        let top = key.split('.').next().unwrap_or(key);
        if !sections.contains(&top) {
            continue;
        }
        let mut value = Some(&defaults);
        for part in key.split('.') {
            value = value.and_then(|v| v.get(part));
        }
        match value {
            Some(v) if !v.is_table() => {
                out.push_str(&format!("  {key} = {v}\n      {doc}\n"));
            }
            _ => out.push_str(&format!("  {key}\n      {doc}\n")),
        }
    }
    out
}
