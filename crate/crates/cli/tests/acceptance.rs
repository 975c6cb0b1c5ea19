//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion
//! and exits non-zero when any criterion fails.

use std::cell::Cell;
use std::collections::{BTreeMap, HashMap};
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use cce::corpus::{CodeFile, Split};
use cce::ensemble::{CompletionList, RankMode, RankedCandidate};
use cce::eval::{accuracy_at_k, benefit, bcr, hidden_cost, replay, SessionLedger};
use cce::feature::set_schema;
use cce::learn::{GbdtModel, GbdtParams, Objective};
use cce::lexer::BpeModel;
use cce::simulate::{char_offsets, file_id, label_candidates, mark_critical, run_parallel, LabeledCandidate};
use cce::simulate::{SimInput, SimulationRunConfig, SimulationSample};
use cce::strategy::{beam_search, subtoken_stats, BeamConfig, Candidate, LocalFrequency, NextTokenModel, Termination};
use cce::strategy::{TrieIndex, WordStats, DIM_GLOBAL_COUNT, DIM_LOCAL_COUNT, GLOBAL};
use cce_cli::artifacts::{digest_tree, sha256_hex};
use cce_cli::commands::{load_strategies, Layout};
use cce_cli::{cmd_eval, cmd_fit, cmd_ingest, cmd_simulate, cmd_train_strategies, RunConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn toy_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/toy_corpus")
}

fn toy_config(build: &Path) -> RunConfig {
    let text = format!(
        "seed = 7\nworkers = 4\n[paths]\ncorpus = {:?}\nbuild = {:?}\nmodels = {:?}\nreports = {:?}\n",
        toy_corpus(),
        build,
        build.join("models"),
        build.join("reports"),
    );
    RunConfig::parse(&text, Path::new("")).expect("toy config")
}

fn load_files(cfg: &RunConfig) -> Vec<CodeFile> {
    let text = std::fs::read_to_string(Layout::new(cfg).corpus_files()).expect("corpus records");
    text.lines().map(|l| serde_json::from_str(l).expect("corpus record")).collect()
}

fn list(cands: &[&str], accepted: bool) -> CompletionList {
    CompletionList {
        candidates: cands
            .iter()
            .enumerate()
            .map(|(i, t)| RankedCandidate {
                candidate: Candidate::new(*t, GLOBAL, i + 1),
                final_score: -(i as f64),
            })
            .collect(),
        mode: RankMode::Fusion,
        accepted,
        acceptance_probability: None,
    }
}

fn c1_walkthrough() -> Outcome {
    let text = "value = getConfigValue();\n";
    let ledger = replay("walkthrough", text, |_, ctx| {
        Ok(if ctx == "value = " {
            list(&["getConfigValue", "getConfig", "toString"], true)
        } else {
            list(&[], false)
        })
    })
    .map_err(|e| e.to_string())?;
    let ls = [ledger];
    let (b, h, r) = (benefit(&ls), hidden_cost(&ls), bcr(&ls));
    ensure!(b == 13, "benefit {b}, expected 13");
    ensure!(h == 1, "hidden cost {h}, expected 1");
    ensure!(r == Some(13.0), "BCR {r:?}, expected 13.0");
    let costs = &ls[0].costs[8..22];
    ensure!(costs[0] == 1 && costs[1..].iter().all(|&c| c == 0), "cost spectrum {costs:?}");
    Ok("benefit 13, hidden cost 1, BCR 13.0".into())
}

/// Lists fixed per position, so the library replay and the counter below
/// see identical inputs.
fn synthetic_lists(rng: &mut ChaCha8Rng, text: &str) -> Vec<CompletionList> {
    let chars: Vec<char> = text.chars().collect();
    (0..chars.len())
        .map(|p| {
            if rng.gen_bool(0.4) {
                return list(&[], false);
            }
            let n = rng.gen_range(1..=5);
            let cands: Vec<String> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        let len = rng.gen_range(1..=8).min(chars.len() - p);
                        chars[p..p + len].iter().collect()
                    } else {
                        (0..rng.gen_range(1..5)).map(|_| rng.gen_range(b'a'..=b'd') as char).collect()
                    }
                })
                .collect();
            let refs: Vec<&str> = cands.iter().map(String::as_str).collect();
            list(&refs, rng.gen_bool(0.85))
        })
        .collect()
}

#[derive(Default, Debug, PartialEq)]
struct Counts {
    shown: u64,
    hit_at: [u64; 6],
    saved: i64,
    cost: u64,
    typed: u64,
}

/// Walks the file with the same lists, counting from the definitions.
fn brute_force(text: &str, lists: &[CompletionList]) -> Counts {
    let chars: Vec<char> = text.chars().collect();
    let mut c = Counts::default();
    let mut pos = 0;
    while pos < chars.len() {
        c.typed += 1;
        let l = &lists[pos];
        if !l.accepted || l.candidates.is_empty() {
            pos += 1;
            continue;
        }
        c.shown += 1;
        let rest: String = chars[pos..].iter().collect();
        let mut best: Option<(usize, usize)> = None;
        let mut first_hit = None;
        for (i, rc) in l.candidates.iter().enumerate() {
            let t = &rc.candidate.text;
            if !t.is_empty() && rest.starts_with(t.as_str()) {
                let len = t.chars().count();
                first_hit.get_or_insert(i + 1);
                if best.map_or(true, |(_, bl)| len > bl) {
                    best = Some((i + 1, len));
                }
            }
        }
        if let Some(r) = first_hit {
            for k in r..=5 {
                c.hit_at[k] += 1;
            }
        }
        match best {
            Some((rank, len)) => {
                c.saved += len as i64 - 1;
                c.cost += rank as u64;
                pos += len;
            }
            None => {
                c.cost += l.candidates.len() as u64;
                pos += 1;
            }
        }
    }
    c
}

fn library_counts(ls: &[SessionLedger]) -> Result<(Counts, [Option<f64>; 6], Option<f64>), String> {
    let mut acc = [None; 6];
    for (k, slot) in acc.iter_mut().enumerate().skip(1) {
        *slot = accuracy_at_k(ls, k).map_err(|e| e.to_string())?;
    }
    let shown = ls.iter().flat_map(|l| &l.events).filter(|e| e.shown).count() as u64;
    let mut hit_at = [0; 6];
    for (k, slot) in hit_at.iter_mut().enumerate().skip(1) {
        *slot = acc[k].map_or(0, |a| (a * shown as f64).round() as u64);
    }
    let counts = Counts {
        shown,
        hit_at,
        saved: benefit(ls),
        cost: hidden_cost(ls),
        typed: ls.iter().map(|l| l.n_cc as u64).sum(),
    };
    Ok((counts, acc, bcr(ls)))
}

fn c2_metric_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let alphabet: Vec<char> = "abcd _.\n(x)".chars().collect();
    let mut ledgers = Vec::new();
    let mut totals = Counts::default();
    for i in 0..50 {
        let n = rng.gen_range(20..200);
        let text: String = (0..n).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
        let lists = synthetic_lists(&mut rng, &text);
        let ledger = replay(&format!("f{i}"), &text, |pos, _| Ok(lists[pos].clone())).map_err(|e| e.to_string())?;
        let expected = brute_force(&text, &lists);
        let (got, acc, ratio) = library_counts(std::slice::from_ref(&ledger))?;
        ensure!(got == expected, "ledger {i}: library {got:?} vs counter {expected:?}");
        for k in 1..=5 {
            let want = (expected.shown > 0).then(|| expected.hit_at[k] as f64 / expected.shown as f64);
            ensure!(
                match (acc[k], want) {
                    (Some(a), Some(b)) => (a - b).abs() <= 1e-12,
                    (a, b) => a == b,
                },
                "ledger {i}: accuracy@{k} {:?} vs {want:?}",
                acc[k]
            );
        }
        let want = (expected.cost > 0).then(|| expected.saved as f64 / expected.cost as f64);
        ensure!(
            ratio.zip(want).map_or(ratio == want, |(a, b)| (a - b).abs() <= 1e-12),
            "ledger {i}: BCR {ratio:?} vs {want:?}"
        );
        totals.shown += expected.shown;
        totals.saved += expected.saved;
        totals.cost += expected.cost;
        totals.typed += expected.typed;
        for k in 1..=5 {
            totals.hit_at[k] += expected.hit_at[k];
        }
        ledgers.push(ledger);
    }
    let (got, _, ratio) = library_counts(&ledgers)?;
    ensure!(got == totals, "aggregate: library {got:?} vs counter {totals:?}");
    let want = totals.saved as f64 / totals.cost as f64;
    ensure!(ratio.is_some_and(|r| (r - want).abs() <= 1e-12), "aggregate BCR {ratio:?} vs {want}");
    Ok(format!("50 ledgers, {} shown lists, aggregate BCR {want:.4}", totals.shown))
}

/// Next-token table keyed by the last token, counting `top_next` calls.
struct CountingModel {
    texts: Vec<String>,
    table: HashMap<u32, Vec<(u32, f64)>>,
    calls: Cell<usize>,
}

impl CountingModel {
    fn dist(&self, context: &[u32]) -> &[(u32, f64)] {
        context.last().and_then(|t| self.table.get(t)).map_or(&[], |v| v.as_slice())
    }
}

impl NextTokenModel for CountingModel {
    fn top_next(&self, context: &[u32], k: usize) -> Vec<(u32, f64)> {
        self.calls.set(self.calls.get() + 1);
        let mut d = self.dist(context).to_vec();
        d.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        d.truncate(k);
        d
    }
    fn logprob(&self, context: &[u32], token: u32) -> f64 {
        self.dist(context).iter().find(|p| p.0 == token).map_or(-100.0, |p| p.1)
    }
    fn token_text(&self, token: u32) -> &str {
        &self.texts[token as usize]
    }
    fn consistent_tokens(&self, pending: &str) -> Vec<u32> {
        (0..self.texts.len() as u32).filter(|&t| self.texts[t as usize].starts_with(pending)).collect()
    }
}

fn check_beam(model: &CountingModel, context: &[u32], cfg: &BeamConfig) -> Result<usize, String> {
    model.calls.set(0);
    let out = beam_search(model, context, "", cfg);
    let sum: usize = out.batch_sizes.iter().sum();
    ensure!(out.evaluations == sum, "evaluations {} != batch sum {sum}", out.evaluations);
    ensure!(model.calls.get() == 1 + out.evaluations, "model called {} times for {} evaluations", model.calls.get(), out.evaluations);
    ensure!(out.batch_sizes.iter().all(|&b| b >= 1 && b <= cfg.k), "batch sizes {:?}", out.batch_sizes);
    for h in &out.hypotheses {
        let mut ctx = context.to_vec();
        let mut lp = 0.0;
        let mut text = String::new();
        for &t in &h.tokens {
            lp += model.logprob(&ctx, t).min(0.0);
            text.push_str(model.token_text(t));
            ctx.push(t);
        }
        ensure!((lp - h.logprob).abs() < 1e-9, "logprob {} vs recomputed {lp}", h.logprob);
        ensure!(text == h.text, "text {:?} vs tokens {text:?}", h.text);
        ensure!(h.logprob >= cfg.threshold, "hypothesis below threshold");
        ensure!(!h.tokens.is_empty() && h.tokens.len() <= cfg.max_steps, "length {}", h.tokens.len());
        ensure!(!h.text.contains('#') && !h.text.contains("//"), "comment in {:?}", h.text);
        let newlines = h.tokens.iter().filter(|&&t| model.token_text(t).contains('\n')).count();
        match h.termination {
            Termination::EndOfLine => ensure!(
                newlines == 1 && model.token_text(*h.tokens.last().unwrap()).contains('\n'),
                "end of line without a final newline token"
            ),
            Termination::MaxSteps => {
                ensure!(h.tokens.len() == cfg.max_steps && newlines == 0, "max steps at length {}", h.tokens.len())
            }
            Termination::BelowThreshold => ensure!(newlines == 0, "newline inside a cut sequence"),
            Termination::Budget => return Err("budget termination without a budget".into()),
        }
    }
    Ok(out.evaluations)
}

fn c3_beam() -> Outcome {
    // tokens 0..5 open the line; 5..15 form the chain x0 -> ... -> x9
    let mut texts: Vec<String> = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
    texts.extend((0..10).map(|i| format!("x{i}")));
    texts.push("<ctx>".into());
    let ln = f64::ln;
    let mut table = HashMap::new();
    table.insert(15, vec![(0, ln(0.2)), (1, ln(0.2)), (2, ln(0.2)), (3, ln(0.2)), (4, ln(0.19))]);
    for t in 0..2 {
        table.insert(t, vec![(5, ln(0.97)), (6, -8.0)]);
    }
    for t in 2..5 {
        table.insert(t, vec![(5, -6.0), (6, -6.5)]);
    }
    for t in 5..14 {
        table.insert(t, vec![(t + 1, ln(0.97)), (0, -8.0)]);
    }
    let model = CountingModel {
        texts,
        table,
        calls: Cell::new(0),
    };
    let cfg = BeamConfig {
        k: 5,
        threshold: -3.0,
        max_steps: 11,
        time_budget_ms: 0,
    };
    let evals = check_beam(&model, &[15], &cfg)?;
    let naive = cfg.k * (cfg.max_steps - 1);
    ensure!(evals == 5 + 2 * 9, "evaluations {evals}, expected 23");

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut total = 0;
    for _ in 0..100 {
        let n = rng.gen_range(3..9);
        let mut texts: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
        texts.extend(["\n".to_string(), ";\n".to_string(), "#".to_string()]);
        let v = texts.len() as u32;
        let mut table = HashMap::new();
        for t in 0..v {
            let w: Vec<f64> = (0..v).map(|_| rng.gen::<f64>().powi(3) + 1e-3).collect();
            let sum: f64 = w.iter().sum();
            table.insert(t, w.iter().enumerate().map(|(i, x)| (i as u32, (x / sum).ln())).collect());
        }
        let model = CountingModel {
            texts,
            table,
            calls: Cell::new(0),
        };
        let cfg = BeamConfig {
            k: rng.gen_range(1..=5),
            threshold: -rng.gen_range(0.5..8.0),
            max_steps: rng.gen_range(1..=12),
            time_budget_ms: 0,
        };
        total += check_beam(&model, &[0], &cfg)?;
    }
    Ok(format!("hand-built model: {evals} evaluations vs naive {naive}; 100 random models, {total} evaluations"))
}

fn c4_cardinality() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = toy_config(dir.path());
    cmd_ingest(&cfg).map_err(|e| e.to_string())?;
    cmd_train_strategies(&cfg).map_err(|e| e.to_string())?;
    let strategies = load_strategies(&cfg).map_err(|e| e.to_string())?;
    let files = load_files(&cfg);
    let inputs: Vec<SimInput> = files
        .iter()
        .map(|f| SimInput {
            id: file_id(&f.path),
            text: f.text.clone(),
        })
        .collect();
    let run = SimulationRunConfig {
        engine: cfg.engine(),
        workers: 4,
        seed: cfg.seed,
    };
    let results = run_parallel(&inputs, &strategies, &run).map_err(|e| e.to_string())?;
    ensure!(results.len() == 50, "{} files simulated", results.len());
    let (mut positions, mut critical) = (0usize, 0usize);
    for (r, input) in results.iter().zip(&inputs) {
        ensure!(!r.failed && r.file == input.id, "{} failed or out of order", r.file);
        let len = input.text.chars().count();
        ensure!(r.samples.len() == len, "{}: {} samples for {len} characters", r.file, r.samples.len());
        ensure!(r.samples.iter().enumerate().all(|(i, s)| s.pos == i), "{}: positions not dense", r.file);
        positions += len;
        critical += r.samples.iter().filter(|s| s.critical).count();
    }
    let fraction = critical as f64 / positions as f64;
    ensure!(fraction > 0.0 && fraction < 1.0, "critical fraction {fraction}");
    Ok(format!("50 files, {positions} samples, critical fraction {fraction:.4}"))
}

struct PlantedCase {
    text: &'static str,
    plants: &'static [(usize, &'static [&'static str])],
    hits: &'static [(usize, &'static str)],
    non_critical: &'static [usize],
}

const PLANTED: &[PlantedCase] = &[
    PlantedCase { text: "abcdef", plants: &[], hits: &[], non_critical: &[] },
    PlantedCase { text: "abcdef", plants: &[(0, &["abc"])], hits: &[(0, "abc")], non_critical: &[1, 2] },
    PlantedCase { text: "abcdef", plants: &[(0, &["abd"])], hits: &[], non_critical: &[] },
    PlantedCase { text: "abcdef", plants: &[(0, &["a", "abcd"])], hits: &[(0, "a"), (0, "abcd")], non_critical: &[1, 2, 3] },
    PlantedCase { text: "abcdef", plants: &[(1, &["bc"])], hits: &[(1, "bc")], non_critical: &[2] },
    PlantedCase { text: "abcdef", plants: &[(0, &["ab"]), (1, &["bcd"])], hits: &[(0, "ab"), (1, "bcd")], non_critical: &[1] },
    PlantedCase { text: "abcdef", plants: &[(0, &["abcdef"])], hits: &[(0, "abcdef")], non_critical: &[1, 2, 3, 4, 5] },
    PlantedCase { text: "abcdef", plants: &[(0, &["abcdefg"])], hits: &[], non_critical: &[] },
    PlantedCase { text: "aaaa", plants: &[(0, &["aa"]), (2, &["aa"])], hits: &[(0, "aa"), (2, "aa")], non_critical: &[1, 3] },
    PlantedCase { text: "aaaa", plants: &[(1, &["aa"])], hits: &[(1, "aa")], non_critical: &[2] },
    PlantedCase { text: "x = y;", plants: &[(4, &["y;"])], hits: &[(4, "y;")], non_critical: &[5] },
    PlantedCase { text: "héllo wörld", plants: &[(0, &["hé"]), (6, &["wö"])], hits: &[(0, "hé"), (6, "wö")], non_critical: &[1, 7] },
    PlantedCase { text: "foo.bar()", plants: &[(4, &["bar", "baz", "ba"])], hits: &[(4, "bar"), (4, "ba")], non_critical: &[5, 6] },
    PlantedCase { text: "foo.bar()", plants: &[(4, &["baz"]), (5, &["ar()"])], hits: &[(5, "ar()")], non_critical: &[6, 7, 8] },
    PlantedCase { text: "ab\ncd", plants: &[(0, &["ab\n"])], hits: &[(0, "ab\n")], non_critical: &[1, 2] },
    PlantedCase { text: "ab\ncd", plants: &[(0, &["ab"]), (1, &["b\ncd"])], hits: &[(0, "ab"), (1, "b\ncd")], non_critical: &[1] },
    PlantedCase { text: "abcabc", plants: &[(0, &["abc"]), (3, &["abc"])], hits: &[(0, "abc"), (3, "abc")], non_critical: &[1, 2, 4, 5] },
    PlantedCase { text: "abcabc", plants: &[(0, &["abc"]), (2, &["cab"])], hits: &[(0, "abc"), (2, "cab")], non_critical: &[1, 2] },
    PlantedCase { text: "abcabc", plants: &[(0, &["ab"]), (2, &["cabc"])], hits: &[(0, "ab"), (2, "cabc")], non_critical: &[1, 3, 4, 5] },
    PlantedCase { text: "z", plants: &[(0, &["z"])], hits: &[(0, "z")], non_critical: &[] },
];

fn c5_labeling() -> Outcome {
    ensure!(PLANTED.len() == 20, "expected 20 planted files");
    for (i, case) in PLANTED.iter().enumerate() {
        let offsets = char_offsets(case.text);
        let n = offsets.len() - 1;
        let mut samples: Vec<SimulationSample> = (0..n)
            .map(|pos| {
                let cands: Vec<Candidate> = case
                    .plants
                    .iter()
                    .filter(|(p, _)| *p == pos)
                    .flat_map(|(_, c)| c.iter())
                    .enumerate()
                    .map(|(r, t)| Candidate::new(*t, GLOBAL, r + 1))
                    .collect();
                let hits = label_candidates(&cands, &case.text[offsets[pos]..]);
                SimulationSample {
                    file: format!("planted{i}"),
                    pos,
                    critical: false,
                    candidates: cands.into_iter().zip(hits).map(|(candidate, hit)| LabeledCandidate { candidate, hit }).collect(),
                }
            })
            .collect();
        mark_critical(&mut samples);
        let mut got_hits: Vec<(usize, &str)> = samples
            .iter()
            .flat_map(|s| s.candidates.iter().filter(|c| c.hit).map(move |c| (s.pos, c.candidate.text.as_str())))
            .collect();
        let mut want_hits = case.hits.to_vec();
        got_hits.sort();
        want_hits.sort();
        ensure!(got_hits == want_hits, "file {i} {:?}: hits {got_hits:?}, expected {want_hits:?}", case.text);
        let non_critical: Vec<usize> = samples.iter().filter(|s| !s.critical).map(|s| s.pos).collect();
        ensure!(
            non_critical == case.non_critical,
            "file {i} {:?}: non-critical {non_critical:?}, expected {:?}",
            case.text,
            case.non_critical
        );
    }
    Ok("20 planted files match the expectation table".into())
}

fn sorted_completions(vocab: &[(String, u64)], prefix: &str, k: usize) -> Vec<(String, f64)> {
    if prefix.is_empty() {
        return Vec::new();
    }
    let mut found: Vec<&(String, u64)> =
        vocab.iter().filter(|(w, _)| w.starts_with(prefix) && w.len() > prefix.len()).collect();
    found.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    found.into_iter().take(k).map(|(w, c)| (w[prefix.len()..].to_string(), *c as f64)).collect()
}

fn random_prefix(rng: &mut ChaCha8Rng, words: &[String]) -> String {
    match rng.gen_range(0..4) {
        0 => (0..rng.gen_range(1..4)).map(|_| rng.gen_range(b'a'..=b'z') as char).collect(),
        1 => words[rng.gen_range(0..words.len())].clone(),
        _ => {
            let w: Vec<char> = words[rng.gen_range(0..words.len())].chars().collect();
            w[..rng.gen_range(1..=w.len())].iter().collect()
        }
    }
}

fn c6_trie_local() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = toy_config(dir.path());
    cmd_ingest(&cfg).map_err(|e| e.to_string())?;
    let files = load_files(&cfg);
    let train: Vec<&CodeFile> = files.iter().filter(|f| f.split == Some(Split::Train)).collect();
    let trie = TrieIndex::build(train.iter().copied(), &cfg.global);
    // the stored vocabulary: sub-tokens passing the rare filter
    let stats: BTreeMap<String, WordStats> = subtoken_stats(train.iter().copied());
    let global_vocab: Vec<(String, u64)> = stats
        .iter()
        .filter(|(w, s)| !(s.project_count <= 1 && w.chars().count() < cfg.global.min_length))
        .map(|(w, s)| (w.clone(), s.count))
        .collect();
    ensure!(trie.len() == global_vocab.len(), "trie holds {} words, filter keeps {}", trie.len(), global_vocab.len());

    let mut local = LocalFrequency::new();
    local.observe(&files[0].text);
    let local_vocab: Vec<(String, u64)> = local.vocabulary().map(|(w, c)| (w.to_string(), c)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let gwords: Vec<String> = global_vocab.iter().map(|w| w.0.clone()).collect();
    let lwords: Vec<String> = local_vocab.iter().map(|w| w.0.clone()).collect();
    let mut nonempty = 0;
    for i in 0..1000 {
        let k = 1 + i % 5;
        let gp = random_prefix(&mut rng, &gwords);
        let got: Vec<(String, f64)> = trie
            .query(&gp, k)
            .into_iter()
            .map(|c| (c.text.clone(), c.score(DIM_GLOBAL_COUNT).unwrap_or(f64::NAN)))
            .collect();
        let want = sorted_completions(&global_vocab, &gp, k);
        ensure!(got == want, "global prefix {gp:?}: {got:?} vs {want:?}");
        let lp = random_prefix(&mut rng, &lwords);
        let got: Vec<(String, f64)> = local
            .query(&lp, k)
            .into_iter()
            .map(|c| (c.text.clone(), c.score(DIM_LOCAL_COUNT).unwrap_or(f64::NAN)))
            .collect();
        let want = sorted_completions(&local_vocab, &lp, k);
        ensure!(got == want, "local prefix {lp:?}: {got:?} vs {want:?}");
        nonempty += !want.is_empty() as usize;
    }
    Ok(format!(
        "1000 prefixes per strategy over {} global and {} local words ({nonempty} non-empty local answers)",
        global_vocab.len(),
        local_vocab.len()
    ))
}

const BPE_FIXTURE: &str = "public int getCount() {\n    return count;\n}\n\
public void setCount(int count) {\n    this.count = count;\n}\n\
for (int i = 0; i < count; i++) {\n    total += values[i];\n}\n";

/// Digest of the merge table trained on the fixture; changes only when
/// the training procedure does.
const BPE_FIXTURE_DIGEST: &str = "3ab0fbabc300cdb022ee24015fb6b432a5ca427c3aec2a6a334550ce3470c969";

fn c7_bpe() -> Outcome {
    let texts = [BPE_FIXTURE; 3];
    let a = BpeModel::train(&texts, 160).map_err(|e| e.to_string())?.to_text();
    let b = BpeModel::train(&texts, 160).map_err(|e| e.to_string())?.to_text();
    ensure!(a == b, "two trainings on the same corpus differ");
    let digest = sha256_hex(a.as_bytes());
    ensure!(digest == BPE_FIXTURE_DIGEST, "merge table digest {digest}");
    let back = BpeModel::from_text(&a).map_err(|e| e.to_string())?;
    ensure!(back.to_text() == a, "merge table does not survive a file roundtrip");

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = toy_config(dir.path());
    cmd_ingest(&cfg).map_err(|e| e.to_string())?;
    let files = load_files(&cfg);
    let train: Vec<&str> = files.iter().filter(|f| f.split == Some(Split::Train)).map(|f| f.text.as_str()).collect();
    let bpe = BpeModel::train(&train, cfg.lm.vocab_size).map_err(|e| e.to_string())?;
    let mut tokens = 0;
    for f in &files {
        let ids = bpe.encode(&f.text).map_err(|e| format!("{}: {e}", f.path))?;
        let text = bpe.decode(&ids).map_err(|e| format!("{}: {e}", f.path))?;
        ensure!(text == f.text, "{}: decode(encode(x)) != x", f.path);
        tokens += ids.len();
    }
    Ok(format!("digest {}..., {} files roundtrip in {tokens} tokens", &digest[..12], files.len()))
}

fn c8_gbdt() -> Outcome {
    let schema = set_schema();
    let width = schema.len();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut sample = |n: usize| -> (Vec<Vec<f64>>, Vec<f64>) {
        let x: Vec<Vec<f64>> = (0..n).map(|_| (0..width).map(|_| rng.gen::<f64>()).collect()).collect();
        let y = x.iter().map(|r| (r[0] > 0.5 && r[5] > 0.3) as u8 as f64).collect();
        (x, y)
    };
    let (x, y) = sample(2000);
    let (tx, ty) = sample(1000);
    let params = GbdtParams::default();
    let model = GbdtModel::fit_rows(&x, &y, Objective::Logistic, &params, Some(schema)).map_err(|e| e.to_string())?;
    let rising = model.loss_history.windows(2).position(|w| w[1] > w[0]);
    ensure!(rising.is_none(), "logistic loss rose after round {rising:?}");
    ensure!(!model.loss_history.is_empty(), "no loss history");

    let noisy: Vec<f64> = x.iter().map(|r| 3.0 * r[1] + (r[2] * 40.0).sin() + rng.gen::<f64>()).collect();
    let reg = GbdtModel::fit_rows(&x, &noisy, Objective::SquaredError, &params, None).map_err(|e| e.to_string())?;
    let rising = reg.loss_history.windows(2).position(|w| w[1] > w[0]);
    ensure!(rising.is_none(), "squared loss rose after round {rising:?}");

    let back = GbdtModel::from_json(&model.to_json().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    for r in &tx {
        ensure!(back.predict_row(r).to_bits() == model.predict_row(r).to_bits(), "roundtrip prediction differs");
    }
    let correct = tx.iter().zip(&ty).filter(|(r, &t)| (model.predict_row(r) >= 0.5) == (t > 0.5)).count();
    let accuracy = correct as f64 / tx.len() as f64;
    ensure!(accuracy >= 0.95, "held-out accuracy {accuracy}");

    let mut worst = Duration::ZERO;
    for r in &tx {
        let t = Instant::now();
        std::hint::black_box(model.predict_row(std::hint::black_box(r)));
        worst = worst.max(t.elapsed());
    }
    ensure!(worst < Duration::from_millis(50), "slowest prediction took {worst:?}");
    Ok(format!(
        "{} rounds, loss {:.4} -> {:.4}, held-out accuracy {accuracy:.4}, slowest prediction {worst:?}",
        model.loss_history.len(),
        model.loss_history[0],
        model.loss_history[model.loss_history.len() - 1]
    ))
}

fn c9_ablation() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = toy_config(dir.path());
    for stage in [cmd_ingest, cmd_train_strategies, cmd_simulate, cmd_fit] {
        stage(&cfg).map_err(|e| e.to_string())?;
    }
    let summary = cmd_eval(&cfg).map_err(|e| e.to_string())?;
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(cfg.paths.reports.join("metrics.json")).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    ensure!(summary["status"] == "ok", "eval summary {summary}");
    let row = |name: &str| -> Result<&serde_json::Value, String> {
        report["ablation"]
            .as_array()
            .and_then(|rows| rows.iter().find(|r| r["pipeline"] == name))
            .map(|r| &r["metrics"])
            .ok_or_else(|| format!("no ablation row {name}"))
    };
    let num = |v: &serde_json::Value, key: &str| v[key].as_f64().ok_or_else(|| format!("{key} missing"));
    let mut lines = Vec::new();
    for (base, gated) in [("fusion", "acceptance+fusion"), ("normalized", "acceptance+normalized")] {
        let (b, g) = (row(base)?, row(gated)?);
        let (bb, gb) = (num(b, "bcr")?, num(g, "bcr")?);
        let (bi, gi) = (num(b, "invalid_list_rate")?, num(g, "invalid_list_rate")?);
        ensure!(gb > bb, "BCR {gated} {gb} <= {base} {bb}");
        ensure!(gi < bi, "invalid-list rate {gated} {gi} >= {base} {bi}");
        lines.push(format!("{base}: BCR {bb:.3} -> {gb:.3}, invalid {bi:.3} -> {gi:.3}"));
    }
    let mut rows: Vec<&serde_json::Value> = report["ablation"].as_array().into_iter().flatten().map(|r| &r["metrics"]).collect();
    rows.extend(report["characteristics"].as_array().into_iter().flatten());
    rows.push(&report["metrics"]);
    for m in rows {
        let (a1, a5) = (num(m, "accuracy_at_1")?, num(m, "accuracy_at_5")?);
        ensure!(a5 >= a1, "Accuracy@5 {a5} < Accuracy@1 {a1}");
    }
    Ok(lines.join("; "))
}

fn c10_parallel_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut cfg = toy_config(dir.path());
    cmd_ingest(&cfg).map_err(|e| e.to_string())?;
    cmd_train_strategies(&cfg).map_err(|e| e.to_string())?;
    let samples = Layout::new(&cfg).samples_dir;
    let mut timings = Vec::new();
    let mut digests = Vec::new();
    for workers in [1, 4] {
        cfg.workers = workers;
        let t = Instant::now();
        cmd_simulate(&cfg).map_err(|e| e.to_string())?;
        timings.push(t.elapsed());
        digests.push(digest_tree(&samples).map_err(|e| e.to_string())?);
    }
    ensure!(!digests[0].is_empty(), "empty sample store");
    ensure!(digests[0] == digests[1], "stores differ between 1 and 4 workers");
    Ok(format!(
        "{} store files identical; 1 worker {:?}, 4 workers {:?}",
        digests[0].len(),
        timings[0],
        timings[1]
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("1 walkthrough BCR 13/1", c1_walkthrough, Duration::from_secs(1)),
        ("2 metric oracle on 50 ledgers", c2_metric_oracle, Duration::from_secs(10)),
        ("3 dynamic beam batching", c3_beam, Duration::from_secs(30)),
        ("4 simulation cardinality", c4_cardinality, Duration::from_secs(120)),
        ("5 labeling and critical oracle", c5_labeling, Duration::from_secs(10)),
        ("6 trie and local-frequency oracle", c6_trie_local, Duration::from_secs(10)),
        ("7 BPE determinism and roundtrip", c7_bpe, Duration::from_secs(30)),
        ("8 GBDT properties", c8_gbdt, Duration::from_secs(60)),
        ("9 directional ablation", c9_ablation, Duration::from_secs(600)),
        ("10 parallel determinism", c10_parallel_determinism, Duration::from_secs(300)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed < limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?} ({detail})"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS [{name}] {elapsed:.2?}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] {elapsed:.2?}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 10 criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
