use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use cce::corpus::{ingest, CodeFile, Split};
use cce::ensemble::{complete, complete_merged, CompletionList, Models, PipelineConfig, RankMode};
use cce::eval::{
    ablation_csv, characteristics, characteristics_csv, cost_spectrum_csv, metrics, replay_store, strategy_view,
    AblationRow, SessionLedger,
};
use cce::feature::{candidate_schema, set_schema};
use cce::learn::{
    make_acceptance_dataset, make_ranking_dataset, score_dimension_values, AcceptanceOptions, GbdtModel, Objective,
    ScalerModel,
};
use cce::lexer::BpeModel;
use cce::simulate::{char_offsets, file_id, read_store, run_parallel, write_store, SimInput, SimulationRunConfig};
use cce::strategy::{LmModel, Strategies, TrieIndex, GLOBAL, LM, LOCAL};
use log::info;
use serde_json::json;

use crate::artifacts::{combined_digest, digest_tree, read_text, replace_dir_atomic, require, write_atomic, Manifest};
use crate::{CliError, RunConfig};

/// The machine-readable line each command prints on success.
pub type Summary = serde_json::Value;

const INGEST: &str = "ingest";
const TRAIN: &str = "train-strategies";
const SIMULATE: &str = "simulate";
const FIT: &str = "fit";

/// Splits that are simulated: the first trains the models, the second is
/// evaluated.
pub const SIMULATED_SPLITS: [Split; 2] = [Split::Simulation, Split::Test];

pub struct Layout {
    pub corpus_dir: PathBuf,
    pub strategies_dir: PathBuf,
    pub samples_dir: PathBuf,
    pub models: PathBuf,
    pub reports: PathBuf,
}

impl Layout {
    pub fn new(cfg: &RunConfig) -> Self {
        Layout {
            corpus_dir: cfg.paths.build.join("corpus"),
            strategies_dir: cfg.paths.build.join("strategies"),
            samples_dir: cfg.paths.build.join("samples"),
            models: cfg.paths.models.clone(),
            reports: cfg.paths.reports.clone(),
        }
    }

    pub fn corpus_files(&self) -> PathBuf {
        self.corpus_dir.join("files.jsonl")
    }

    pub fn store(&self, split: Split) -> PathBuf {
        self.samples_dir.join(split.as_str())
    }

    pub fn trie(&self) -> PathBuf {
        self.strategies_dir.join("trie.tsv")
    }

    pub fn bpe(&self) -> PathBuf {
        self.strategies_dir.join("bpe.txt")
    }

    pub fn lm(&self) -> PathBuf {
        self.strategies_dir.join("lm.json")
    }

    pub fn acceptance_model(&self) -> PathBuf {
        self.models.join("acceptance.json")
    }

    pub fn ranking_model(&self) -> PathBuf {
        self.models.join("ranking.json")
    }

    pub fn scaler(&self) -> PathBuf {
        self.models.join("scaler.json")
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string(value).context("encoding json")?)
}

fn json_pretty<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).context("encoding json")?;
    s.push('\n');
    Ok(s)
}

fn record_dir(manifest: &mut Manifest, area: &str, dir: &Path) -> Result<String, CliError> {
    let digests = digest_tree(dir)?;
    manifest.replace(area, &digests);
    Ok(combined_digest(&digests))
}

fn load_corpus(layout: &Layout) -> Result<Vec<CodeFile>, CliError> {
    let text = read_text(INGEST, &layout.corpus_files())?;
    text.lines()
        .map(|l| serde_json::from_str(l).map_err(|e| anyhow::anyhow!("corrupt corpus record: {e}").into()))
        .collect()
}

pub fn cmd_ingest(cfg: &RunConfig) -> Result<Summary, CliError> {
    if !cfg.paths.corpus.is_dir() {
        return Err(CliError::Config(format!("corpus directory {} does not exist", cfg.paths.corpus.display())));
    }
    let layout = Layout::new(cfg);
    let corpus = ingest(&cfg.paths.corpus, &cfg.ingest_options())?;
    let mut files = corpus.files.clone();
    files.sort_by(|a, b| a.path.cmp(&b.path));
    let mut records = String::new();
    for f in &files {
        records.push_str(&json_line(f)?);
        records.push('\n');
    }
    let manifest_json = json_pretty(&corpus.manifest())?;
    replace_dir_atomic(&layout.corpus_dir, |dir| {
        write_atomic(&dir.join("files.jsonl"), records.as_bytes())?;
        write_atomic(&dir.join("manifest.json"), manifest_json.as_bytes())
    })?;
    let mut digests = Manifest::open(&cfg.paths.build)?;
    let digest = record_dir(&mut digests, "build/corpus", &layout.corpus_dir)?;
    digests.save()?;
    let count = |s: Split| files.iter().filter(|f| f.split == Some(s)).count();
    Ok(json!({
        "command": INGEST,
        "status": "ok",
        "files": files.len(),
        "train": count(Split::Train),
        "simulation": count(Split::Simulation),
        "test": count(Split::Test),
        "digest": digest,
    }))
}

pub fn cmd_train_strategies(cfg: &RunConfig) -> Result<Summary, CliError> {
    let layout = Layout::new(cfg);
    let files = load_corpus(&layout)?;
    let train: Vec<&CodeFile> = files.iter().filter(|f| f.split == Some(Split::Train)).collect();
    if train.is_empty() {
        return Err(CliError::Config("the train split is empty".into()));
    }
    let started = Instant::now();
    let trie = cfg.strategies.global.then(|| TrieIndex::build(train.iter().copied(), &cfg.global));
    let mut lm_parts = None;
    if cfg.strategies.lm {
        let texts: Vec<&str> = train.iter().map(|f| f.text.as_str()).collect();
        let bpe = BpeModel::train(&texts, cfg.lm.vocab_size)?;
        let lm = LmModel::train(&texts, &bpe, &cfg.lm)?;
        lm_parts = Some((bpe.to_text(), lm.to_json()?, lm.context_count()));
    }
    replace_dir_atomic(&layout.strategies_dir, |dir| {
        if let Some(trie) = &trie {
            write_atomic(&dir.join("trie.tsv"), trie.to_tsv().as_bytes())?;
        }
        if let Some((bpe, lm, _)) = &lm_parts {
            write_atomic(&dir.join("bpe.txt"), bpe.as_bytes())?;
            write_atomic(&dir.join("lm.json"), lm.as_bytes())?;
        }
        Ok(())
    })?;
    info!("trained strategies in {:?}", started.elapsed());
    let mut digests = Manifest::open(&cfg.paths.build)?;
    let digest = record_dir(&mut digests, "build/strategies", &layout.strategies_dir)?;
    digests.save()?;
    Ok(json!({
        "command": TRAIN,
        "status": "ok",
        "train_files": train.len(),
        "trie_words": trie.as_ref().map(TrieIndex::len),
        "lm_contexts": lm_parts.as_ref().map(|p| p.2),
        "digest": digest,
    }))
}

/// Loads the artifacts of every enabled strategy.
pub fn load_strategies(cfg: &RunConfig) -> Result<Strategies, CliError> {
    let layout = Layout::new(cfg);
    let mut s = Strategies::default();
    if cfg.strategies.global {
        s.trie = Some(TrieIndex::from_tsv(&read_text(TRAIN, &layout.trie())?)?);
    }
    if cfg.strategies.lm {
        s.bpe = Some(BpeModel::from_text(&read_text(TRAIN, &layout.bpe())?)?);
        s.lm = Some(LmModel::from_json(&read_text(TRAIN, &layout.lm())?)?);
    }
    Ok(s)
}

pub fn cmd_simulate(cfg: &RunConfig) -> Result<Summary, CliError> {
    let layout = Layout::new(cfg);
    let files = load_corpus(&layout)?;
    let strategies = load_strategies(cfg)?;
    let run = SimulationRunConfig {
        engine: cfg.engine(),
        workers: cfg.workers,
        seed: cfg.seed,
    };
    let started = Instant::now();
    let mut digests = Manifest::open(&cfg.paths.build)?;
    let mut report = serde_json::Map::new();
    let mut summary = json!({ "command": SIMULATE, "status": "ok", "workers": cfg.workers });
    for split in SIMULATED_SPLITS {
        let inputs: Vec<SimInput> = files
            .iter()
            .filter(|f| f.split == Some(split))
            .map(|f| SimInput {
                id: file_id(&f.path),
                text: f.text.clone(),
            })
            .collect();
        let texts: BTreeMap<String, String> = inputs.iter().map(|f| (f.id.clone(), f.text.clone())).collect();
        let results = run_parallel(&inputs, &strategies, &run)?;
        let dir = layout.store(split);
        replace_dir_atomic(&dir, |tmp| Ok(write_store(tmp, &results, &texts)?))?;
        let positions: usize = results.iter().map(|r| r.samples.len()).sum();
        let critical: usize = results.iter().flat_map(|r| &r.samples).filter(|s| s.critical).count();
        let failed: Vec<&str> = results.iter().filter(|r| r.failed).map(|r| r.file.as_str()).collect();
        let digest = record_dir(&mut digests, &format!("build/samples/{}", split.as_str()), &dir)?;
        let stats = json!({
            "files": results.len(),
            "failed": failed,
            "positions": positions,
            "critical": critical,
            "critical_fraction": (positions > 0).then(|| critical as f64 / positions as f64),
            "digest": digest,
        });
        report.insert(split.as_str().to_string(), stats.clone());
        summary[split.as_str()] = stats;
    }
    let elapsed = started.elapsed();
    info!("simulated in {elapsed:?} with {} workers", cfg.workers);
    let report_path = layout.reports.join("simulation.json");
    let report_text = json_pretty(&report)?;
    write_atomic(&report_path, report_text.as_bytes())?;
    digests.record("reports/simulation.json".into(), report_text.as_bytes());
    digests.save()?;
    summary["elapsed_ms"] = json!(elapsed.as_millis() as u64);
    Ok(summary)
}

fn read_split(layout: &Layout, split: Split) -> Result<Vec<cce::simulate::StoredFile>, CliError> {
    let dir = layout.store(split);
    require(SIMULATE, &dir)?;
    Ok(read_store(&dir)?)
}

pub fn cmd_fit(cfg: &RunConfig) -> Result<Summary, CliError> {
    let layout = Layout::new(cfg);
    let sim = read_split(&layout, Split::Simulation)?;
    let started = Instant::now();
    let acc = make_acceptance_dataset(
        &sim,
        AcceptanceOptions {
            include_empty: cfg.acceptance.include_empty,
        },
    );
    let rank = make_ranking_dataset(&sim);
    if acc.positives() == 0 || acc.positives() == acc.len() {
        return Err(anyhow::anyhow!("acceptance dataset needs both classes ({} of {} positive)", acc.positives(), acc.len()).into());
    }
    if rank.is_empty() {
        return Err(anyhow::anyhow!("ranking dataset is empty: no critical position has a hit").into());
    }
    let acceptance = GbdtModel::fit(&acc.x, &acc.y, Objective::Logistic, &cfg.gbdt.acceptance, set_schema())?;
    let ranker = GbdtModel::fit(&rank.x, &rank.y, Objective::SquaredError, &cfg.gbdt.ranking, candidate_schema())?;
    let scaler = ScalerModel::fit(&score_dimension_values(&sim));
    info!("fitted models in {:?}", started.elapsed());

    let mut digests = Manifest::open(&cfg.paths.build)?;
    for (name, text) in [
        ("acceptance.json", acceptance.to_json()?),
        ("ranking.json", ranker.to_json()?),
        ("scaler.json", scaler.to_json()?),
    ] {
        write_atomic(&layout.models.join(name), text.as_bytes())?;
        digests.record(format!("models/{name}"), text.as_bytes());
    }
    let mut importance = String::from("model,feature,splits\n");
    for (model, m) in [("acceptance", &acceptance), ("ranking", &ranker)] {
        for (feature, splits) in m.named_importance() {
            importance.push_str(&format!("{model},{feature},{splits}\n"));
        }
    }
    write_atomic(&layout.reports.join("importance.csv"), importance.as_bytes())?;
    digests.record("reports/importance.csv".into(), importance.as_bytes());
    digests.save()?;
    Ok(json!({
        "command": FIT,
        "status": "ok",
        "acceptance_samples": acc.len(),
        "acceptance_positives": acc.positives(),
        "ranking_samples": rank.len(),
        "ranking_positives": rank.positives(),
        "acceptance_trees": acceptance.trees.len(),
        "ranking_trees": ranker.trees.len(),
        "scaler_dimensions": scaler.dims.len(),
    }))
}

/// Loads the models a pipeline needs; unneeded ones stay `None`.
pub fn load_models(cfg: &RunConfig, acceptance: bool, ranker: bool, scaler: bool) -> Result<Models, CliError> {
    let layout = Layout::new(cfg);
    let gbdt = |path: PathBuf| -> Result<GbdtModel, CliError> { Ok(GbdtModel::from_json(&read_text(FIT, &path)?)?) };
    Ok(Models {
        acceptance: acceptance.then(|| gbdt(layout.acceptance_model())).transpose()?,
        ranker: ranker.then(|| gbdt(layout.ranking_model())).transpose()?,
        scaler: scaler
            .then(|| -> Result<ScalerModel, CliError> { Ok(ScalerModel::from_json(&read_text(FIT, &layout.scaler())?)?) })
            .transpose()?,
    })
}

/// The four gate/ranking combinations compared in the ablation table.
pub fn ablation_pipelines(base: &PipelineConfig) -> Vec<(&'static str, PipelineConfig)> {
    [
        ("normalized", false, RankMode::Normalized),
        ("fusion", false, RankMode::Fusion),
        ("acceptance+normalized", true, RankMode::Normalized),
        ("acceptance+fusion", true, RankMode::Fusion),
    ]
    .into_iter()
    .map(|(name, gate, mode)| {
        (
            name,
            PipelineConfig {
                gate,
                mode,
                ..base.clone()
            },
        )
    })
    .collect()
}

pub fn cmd_eval(cfg: &RunConfig) -> Result<Summary, CliError> {
    let layout = Layout::new(cfg);
    let test = read_split(&layout, Split::Test)?;
    let models = load_models(cfg, true, true, true)?;
    let run = |pc: &PipelineConfig| -> Result<Vec<SessionLedger>, CliError> {
        Ok(replay_store(&test, |ctx, cands| complete_merged(ctx, cands, &models, pc))?)
    };

    let mut rows = Vec::new();
    for (name, pc) in ablation_pipelines(&cfg.pipeline) {
        rows.push(AblationRow {
            pipeline: name.to_string(),
            metrics: metrics(&run(&pc)?),
        });
    }
    let configured = run(&cfg.pipeline)?;
    let overall = metrics(&configured);

    let mut chars = Vec::new();
    for (strategy, on) in [(GLOBAL, cfg.strategies.global), (LOCAL, cfg.strategies.local), (LM, cfg.strategies.lm)] {
        if !on {
            continue;
        }
        let view = PipelineConfig {
            gate: false,
            mode: RankMode::Unranked,
            ..cfg.pipeline.clone()
        };
        let ledgers = replay_store(&test, |ctx, cands| complete_merged(ctx, &strategy_view(cands, strategy), &models, &view))?;
        chars.push(characteristics(strategy, &ledgers));
    }

    let mut digests = Manifest::open(&cfg.paths.build)?;
    let report = json!({
        "pipeline": cfg.pipeline,
        "metrics": overall,
        "ablation": rows,
        "characteristics": chars,
    });
    let outputs = [
        ("metrics.json", json_pretty(&report)?),
        ("ablation.csv", ablation_csv(&rows)),
        ("characteristics.csv", characteristics_csv(&chars)),
    ];
    for (name, text) in &outputs {
        write_atomic(&layout.reports.join(name), text.as_bytes())?;
        digests.record(format!("reports/{name}"), text.as_bytes());
    }
    let spectra = layout.reports.join("spectra");
    replace_dir_atomic(&spectra, |dir| {
        for l in &configured {
            write_atomic(&dir.join(format!("{}.csv", l.file)), cost_spectrum_csv(l).as_bytes())?;
        }
        Ok(())
    })?;
    record_dir(&mut digests, "reports/spectra", &spectra)?;
    digests.save()?;
    Ok(json!({
        "command": "eval",
        "status": "ok",
        "files": test.len(),
        "metrics": overall,
        "ablation": rows.iter().map(|r| json!({"pipeline": r.pipeline, "bcr": r.metrics.bcr, "invalid_list_rate": r.metrics.invalid_list_rate})).collect::<Vec<_>>(),
    }))
}

/// Completes at character `offset` of `file` with the configured pipeline.
pub fn cmd_complete(cfg: &RunConfig, file: &Path, offset: usize) -> Result<Summary, CliError> {
    let text = fs::read_to_string(file).map_err(|e| CliError::Config(format!("cannot read {}: {e}", file.display())))?;
    let offsets = char_offsets(&text);
    let Some(&byte) = offsets.get(offset) else {
        return Err(CliError::Config(format!(
            "offset {offset} is past the end of {} ({} characters)",
            file.display(),
            offsets.len() - 1
        )));
    };
    let strategies = load_strategies(cfg)?;
    let pc = &cfg.pipeline;
    let models = load_models(
        cfg,
        pc.gate,
        pc.mode == RankMode::Fusion,
        pc.mode == RankMode::Normalized,
    )?;
    let mut session = strategies.session(&cfg.engine())?;
    let context = &text[..byte];
    let list: CompletionList = complete(context, &mut session, &models, pc)?;
    Ok(json!({
        "command": "complete",
        "status": "ok",
        "file": file.display().to_string(),
        "offset": offset,
        "list": list,
    }))
}
