//! Character-by-character typing replay that collects labeled candidate
//! sets, plus the on-disk sample store.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::strategy::{Candidate, EngineConfig, Strategies};

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledCandidate {
    pub candidate: Candidate,
    pub hit: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationSample {
    pub file: String,
    /// Cursor position as a character index.
    pub pos: usize,
    pub critical: bool,
    pub candidates: Vec<LabeledCandidate>,
}

impl SimulationSample {
    pub fn has_hit(&self) -> bool {
        self.candidates.iter().any(|c| c.hit)
    }

    /// Character length of the longest hit.
    pub fn longest_hit(&self) -> Option<usize> {
        self.candidates.iter().filter(|c| c.hit).map(|c| c.candidate.len()).max()
    }
}

#[derive(Serialize, Deserialize)]
struct WireCandidate {
    text: String,
    strategies: Vec<String>,
    ranks: Vec<usize>,
    scores: BTreeMap<String, f64>,
    hit: u8,
}

#[derive(Serialize, Deserialize)]
struct WireSample {
    file: String,
    pos: usize,
    critical: u8,
    candidates: Vec<WireCandidate>,
}

impl From<&SimulationSample> for WireSample {
    fn from(s: &SimulationSample) -> Self {
        WireSample {
            file: s.file.clone(),
            pos: s.pos,
            critical: s.critical as u8,
            candidates: s
                .candidates
                .iter()
                .map(|c| WireCandidate {
                    text: c.candidate.text.clone(),
                    strategies: c.candidate.strategies.keys().cloned().collect(),
                    ranks: c.candidate.strategies.values().copied().collect(),
                    scores: c.candidate.scores.clone(),
                    hit: c.hit as u8,
                })
                .collect(),
        }
    }
}

impl TryFrom<WireSample> for SimulationSample {
    type Error = Error;

    fn try_from(w: WireSample) -> Result<Self> {
        let mut candidates = Vec::with_capacity(w.candidates.len());
        for c in w.candidates {
            if c.strategies.len() != c.ranks.len() || c.text.is_empty() {
                return Err(Error::Model(format!("malformed candidate in {} at {}", w.file, w.pos)));
            }
            candidates.push(LabeledCandidate {
                candidate: Candidate {
                    text: c.text,
                    strategies: c.strategies.into_iter().zip(c.ranks).collect(),
                    scores: c.scores,
                },
                hit: c.hit != 0,
            });
        }
        Ok(SimulationSample {
            file: w.file,
            pos: w.pos,
            critical: w.critical != 0,
            candidates,
        })
    }
}

/// A candidate hits when the text after the cursor starts with it.
pub fn label_candidates(candidates: &[Candidate], suffix: &str) -> Vec<bool> {
    candidates.iter().map(|c| !c.text.is_empty() && suffix.starts_with(&c.text)).collect()
}

/// Byte offset of every character position, plus the end of the text.
pub fn char_offsets(text: &str) -> Vec<usize> {
    text.char_indices().map(|(i, _)| i).chain(std::iter::once(text.len())).collect()
}

/// Marks cursor positions a typist would actually stop at. Accepting the
/// longest hit of length `L` at a critical position `p` costs one keystroke
/// and moves the cursor to `p + L`, so `p + 1 .. p + L` are skipped;
/// without a hit the next position is typed by hand and is critical.
pub fn mark_critical(samples: &mut [SimulationSample]) {
    let mut next = 0;
    for s in samples.iter_mut() {
        s.critical = s.pos == next;
        if s.critical {
            next = s.pos + s.longest_hit().unwrap_or(1).max(1);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SimulationRunConfig {
    pub engine: EngineConfig,
    pub workers: usize,
    pub seed: u64,
}

impl Default for SimulationRunConfig {
    fn default() -> Self {
        SimulationRunConfig {
            engine: EngineConfig::default(),
            workers: 1,
            seed: 0,
        }
    }
}

/// Replays the typing of one file. Every character position yields one
/// sample; a failing strategy call leaves that sample without candidates.
pub fn simulate_file(file_id: &str, text: &str, strategies: &Strategies, cfg: &EngineConfig) -> Result<Vec<SimulationSample>> {
    let mut session = strategies.session(cfg)?;
    let offsets = char_offsets(text);
    let mut samples = Vec::with_capacity(offsets.len().saturating_sub(1));
    for (pos, &b) in offsets[..offsets.len() - 1].iter().enumerate() {
        let merged = match session.query(&text[..b]) {
            Ok(g) => g.merged,
            Err(e) => {
                log::warn!("{file_id}@{pos}: strategy query failed: {e}");
                Vec::new()
            }
        };
        let hits = label_candidates(&merged, &text[b..]);
        samples.push(SimulationSample {
            file: file_id.to_string(),
            pos,
            critical: false,
            candidates: merged
                .into_iter()
                .zip(hits)
                .map(|(candidate, hit)| LabeledCandidate { candidate, hit })
                .collect(),
        });
    }
    mark_critical(&mut samples);
    Ok(samples)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FileResult {
    pub file: String,
    pub samples: Vec<SimulationSample>,
    /// Set when the file failed twice; `samples` is then empty.
    pub failed: bool,
}

/// One file to simulate: its id and preprocessed text.
#[derive(Debug, Clone)]
pub struct SimInput {
    pub id: String,
    pub text: String,
}

/// Simulates files on a pool of `workers` threads. Each file is retried
/// once after a panic or error. Output is sorted by file id, whatever the
/// worker count or completion order.
pub fn run_parallel(files: &[SimInput], strategies: &Strategies, cfg: &SimulationRunConfig) -> Result<Vec<FileResult>> {
    if cfg.workers == 0 {
        return Err(Error::Config("worker count must be at least 1".into()));
    }
    cfg.engine.validate()?;
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(files.len()));
    let attempt = |f: &SimInput| {
        panic::catch_unwind(AssertUnwindSafe(|| simulate_file(&f.id, &f.text, strategies, &cfg.engine)))
            .map_err(|_| Error::Model(format!("worker panicked on {}", f.id)))
            .and_then(|r| r)
    };
    std::thread::scope(|scope| {
        for _ in 0..cfg.workers.min(files.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(f) = files.get(i) else { break };
                let outcome = attempt(f).or_else(|e| {
                    log::warn!("retrying {}: {e}", f.id);
                    attempt(f)
                });
                let result = match outcome {
                    Ok(samples) => FileResult {
                        file: f.id.clone(),
                        samples,
                        failed: false,
                    },
                    Err(e) => {
                        log::error!("simulation of {} failed: {e}", f.id);
                        FileResult {
                            file: f.id.clone(),
                            samples: Vec::new(),
                            failed: true,
                        }
                    }
                };
                results.lock().unwrap_or_else(|e| e.into_inner()).push(result);
            });
        }
    });
    let mut results = results.into_inner().unwrap_or_else(|e| e.into_inner());
    results.sort_by(|a, b| a.file.cmp(&b.file));
    Ok(results)
}

/// File-system safe id for a corpus path.
pub fn file_id(path: &str) -> String {
    path.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '.' || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

pub fn samples_to_jsonl(samples: &[SimulationSample]) -> Result<String> {
    let mut out = String::new();
    for s in samples {
        out.push_str(&serde_json::to_string(&WireSample::from(s))?);
        out.push('\n');
    }
    Ok(out)
}

pub fn samples_from_jsonl(reader: impl BufRead) -> Result<Vec<SimulationSample>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(|e| Error::io("<sample stream>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let wire: WireSample = serde_json::from_str(&line)?;
        out.push(wire.try_into()?);
    }
    Ok(out)
}

/// A simulated file read back from the store.
#[derive(Debug, Clone, PartialEq)]
pub struct StoredFile {
    pub id: String,
    pub samples: Vec<SimulationSample>,
    /// The file text, kept apart from the samples.
    pub truth: String,
}

/// Writes `<id>.jsonl` and the ground-truth shard `<id>.truth.txt` per file.
pub fn write_store(dir: &Path, results: &[FileResult], texts: &BTreeMap<String, String>) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    for r in results.iter().filter(|r| !r.failed) {
        let path = dir.join(format!("{}.jsonl", r.file));
        let f = fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
        let mut w = BufWriter::new(f);
        w.write_all(samples_to_jsonl(&r.samples)?.as_bytes())
            .and_then(|_| w.flush())
            .map_err(|e| Error::io(&path, e))?;
        let truth = texts
            .get(&r.file)
            .ok_or_else(|| Error::InvalidArgument(format!("no text for {}", r.file)))?;
        let tpath = dir.join(format!("{}.truth.txt", r.file));
        fs::write(&tpath, truth).map_err(|e| Error::io(&tpath, e))?;
    }
    Ok(())
}

/// Reads every file of a store directory, sorted by id.
pub fn read_store(dir: &Path) -> Result<Vec<StoredFile>> {
    let mut ids: Vec<String> = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok())
        .filter_map(|e| e.file_name().to_str().and_then(|n| n.strip_suffix(".jsonl")).map(String::from))
        .collect();
    ids.sort();
    ids.into_iter()
        .map(|id| {
            let path = dir.join(format!("{id}.jsonl"));
            let f = fs::File::open(&path).map_err(|e| Error::io(&path, e))?;
            let samples = samples_from_jsonl(BufReader::new(f))?;
            let tpath = dir.join(format!("{id}.truth.txt"));
            let truth = fs::read_to_string(&tpath).map_err(|e| Error::io(&tpath, e))?;
            Ok(StoredFile { id, samples, truth })
        })
        .collect()
}
