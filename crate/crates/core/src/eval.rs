//! Keystroke replay and the metrics computed from it: Accuracy@K, Benefit,
//! HiddenCost, BCR, strategy characteristics and the cost spectrum.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ensemble::{CompletionList, RankedCandidate};
use crate::error::{Error, Result};
use crate::lexer::{identifier_prefix, is_ident_char};
use crate::simulate::{char_offsets, StoredFile};
use crate::strategy::Candidate;

/// Highest value in a cost spectrum: browse five candidates, then type.
pub const MAX_COST: u8 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionEvent {
    pub position: usize,
    /// The gate let the list through and it was not empty.
    pub shown: bool,
    pub list_length: usize,
    /// 1-based ranks of every correct candidate, ascending.
    pub hit_positions: Vec<usize>,
    /// Length of the longest correct candidate.
    pub chosen_length: Option<usize>,
    /// Rank of that candidate; the first one among equally long answers.
    pub chosen_rank: Option<usize>,
    /// Characters of the current identifier already typed.
    pub prefix_length: usize,
    /// The chosen candidate ends where a token of the file ends.
    pub completes_token: Option<bool>,
}

impl CompletionEvent {
    pub fn is_hit(&self) -> bool {
        !self.hit_positions.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionLedger {
    pub file: String,
    /// Characters in the file.
    pub n_ori: usize,
    /// Keystrokes typed during replay, one per visited position.
    pub n_cc: usize,
    /// One event per visited position where a list was produced.
    pub events: Vec<CompletionEvent>,
    /// Per-character cost values in `0..=MAX_COST`.
    pub costs: Vec<u8>,
}

/// Replays typing `text`. At each visited position `complete` is asked for a
/// list; when the shown list contains correct candidates the longest one is
/// accepted for one keystroke and the cursor jumps past it, otherwise one
/// character is typed.
pub fn replay<F>(file: &str, text: &str, mut complete: F) -> Result<SessionLedger>
where
    F: FnMut(usize, &str) -> Result<CompletionList>,
{
    let offsets = char_offsets(text);
    let n = offsets.len() - 1;
    let mut ledger = SessionLedger {
        file: file.to_string(),
        n_ori: n,
        n_cc: 0,
        events: Vec::new(),
        costs: vec![1; n],
    };
    let mut pos = 0;
    while pos < n {
        let b = offsets[pos];
        let list = complete(pos, &text[..b])?;
        let suffix = &text[b..];
        ledger.n_cc += 1;
        let shown = list.shown();
        if shown.is_empty() {
            if !list.candidates.is_empty() {
                ledger.events.push(event(pos, false, &list.candidates, suffix, &text[..b]));
            }
            pos += 1;
            continue;
        }
        let ev = event(pos, true, shown, suffix, &text[..b]);
        match (ev.chosen_rank, ev.chosen_length) {
            (Some(rank), Some(len)) => {
                ledger.costs[pos] = rank.min(MAX_COST as usize) as u8;
                for c in &mut ledger.costs[pos + 1..pos + len] {
                    *c = 0;
                }
                pos += len;
            }
            _ => {
                ledger.costs[pos] = (1 + ev.list_length).min(MAX_COST as usize) as u8;
                pos += 1;
            }
        }
        ledger.events.push(ev);
    }
    Ok(ledger)
}

fn event(position: usize, shown: bool, list: &[RankedCandidate], suffix: &str, context: &str) -> CompletionEvent {
    let hit_positions: Vec<usize> = list
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.candidate.text.is_empty() && suffix.starts_with(&r.candidate.text))
        .map(|(i, _)| i + 1)
        .collect();
    let chosen = hit_positions
        .iter()
        .map(|&r| (r, list[r - 1].candidate.len()))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    let completes_token = chosen.map(|(r, _)| {
        let text = &list[r - 1].candidate.text;
        let ends_word = text.chars().last().is_some_and(is_ident_char);
        !ends_word || !suffix[text.len()..].chars().next().is_some_and(is_ident_char)
    });
    CompletionEvent {
        position,
        shown,
        list_length: list.len(),
        hit_positions,
        chosen_length: chosen.map(|c| c.1),
        chosen_rank: chosen.map(|c| c.0),
        prefix_length: identifier_prefix(context).chars().count(),
        completes_token,
    }
}

fn shown_events(ledgers: &[SessionLedger]) -> impl Iterator<Item = &CompletionEvent> {
    ledgers.iter().flat_map(|l| &l.events).filter(|e| e.shown)
}

/// Share of shown lists with a correct answer in the top `k`; `None` when
/// no list was shown.
pub fn accuracy_at_k(ledgers: &[SessionLedger], k: usize) -> Result<Option<f64>> {
    if k < 1 {
        return Err(Error::InvalidArgument("K must be at least 1".into()));
    }
    let (mut shown, mut hits) = (0usize, 0usize);
    for e in shown_events(ledgers) {
        shown += 1;
        hits += e.hit_positions.first().is_some_and(|&r| r <= k) as usize;
    }
    Ok((shown > 0).then(|| hits as f64 / shown as f64))
}

/// Keystrokes saved: `N_ori - N_cc`.
pub fn benefit(ledgers: &[SessionLedger]) -> i64 {
    ledgers.iter().map(|l| l.n_ori as i64 - l.n_cc as i64).sum()
}

/// Rows browsed: the rank of the longest correct answer for hit lists, the
/// whole list otherwise.
pub fn hidden_cost(ledgers: &[SessionLedger]) -> u64 {
    shown_events(ledgers)
        .map(|e| e.chosen_rank.unwrap_or(e.list_length) as u64)
        .sum()
}

pub fn bcr(ledgers: &[SessionLedger]) -> Option<f64> {
    let cost = hidden_cost(ledgers);
    (cost > 0).then(|| benefit(ledgers) as f64 / cost as f64)
}

/// Shown lists without a correct answer, over shown lists.
pub fn invalid_list_rate(ledgers: &[SessionLedger]) -> Option<f64> {
    let (mut shown, mut invalid) = (0usize, 0usize);
    for e in shown_events(ledgers) {
        shown += 1;
        invalid += !e.is_hit() as usize;
    }
    (shown > 0).then(|| invalid as f64 / shown as f64)
}

/// Nearest-rank quantile of `values`, `q` in (0, 1].
pub fn nearest_rank(values: &[usize], q: f64) -> Option<usize> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_unstable();
    let rank = ((q * v.len() as f64).ceil() as usize).clamp(1, v.len());
    Some(v[rank - 1])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub files: usize,
    pub n_ori: usize,
    pub n_cc: usize,
    pub shown: usize,
    pub accuracy_at_1: Option<f64>,
    pub accuracy_at_5: Option<f64>,
    pub benefit: i64,
    pub hidden_cost: u64,
    pub bcr: Option<f64>,
    pub invalid_list_rate: Option<f64>,
}

pub fn metrics(ledgers: &[SessionLedger]) -> Metrics {
    Metrics {
        files: ledgers.len(),
        n_ori: ledgers.iter().map(|l| l.n_ori).sum(),
        n_cc: ledgers.iter().map(|l| l.n_cc).sum(),
        shown: shown_events(ledgers).count(),
        accuracy_at_1: accuracy_at_k(ledgers, 1).expect("K >= 1"),
        accuracy_at_5: accuracy_at_k(ledgers, 5).expect("K >= 1"),
        benefit: benefit(ledgers),
        hidden_cost: hidden_cost(ledgers),
        bcr: bcr(ledgers),
        invalid_list_rate: invalid_list_rate(ledgers),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Characteristics {
    pub strategy: String,
    /// Visited positions with a non-empty list.
    pub occurrence_rate: Option<f64>,
    /// Nearest-rank 90th percentile of the accepted rank.
    pub hit_position_p90: Option<usize>,
    /// Mean identifier characters typed before a hit.
    pub prefix_length: Option<f64>,
    /// Share of accepted candidates that finish a token.
    pub completeness: Option<f64>,
    pub accuracy_at_1: Option<f64>,
    pub accuracy_at_5: Option<f64>,
}

pub fn characteristics(strategy: &str, ledgers: &[SessionLedger]) -> Characteristics {
    let visited: usize = ledgers.iter().map(|l| l.n_cc).sum();
    let shown: Vec<&CompletionEvent> = shown_events(ledgers).collect();
    let hits: Vec<&CompletionEvent> = shown.iter().copied().filter(|e| e.is_hit()).collect();
    let ranks: Vec<usize> = hits.iter().filter_map(|e| e.chosen_rank).collect();
    let mean = |xs: &[f64]| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
    let prefix: Vec<f64> = hits.iter().map(|e| e.prefix_length as f64).collect();
    let complete: Vec<f64> = hits
        .iter()
        .filter_map(|e| e.completes_token)
        .map(|c| c as u8 as f64)
        .collect();
    Characteristics {
        strategy: strategy.to_string(),
        occurrence_rate: (visited > 0).then(|| shown.len() as f64 / visited as f64),
        hit_position_p90: nearest_rank(&ranks, 0.9),
        prefix_length: mean(&prefix),
        completeness: mean(&complete),
        accuracy_at_1: accuracy_at_k(ledgers, 1).expect("K >= 1"),
        accuracy_at_5: accuracy_at_k(ledgers, 5).expect("K >= 1"),
    }
}

/// One strategy's own list from a merged candidate set, in its own order.
pub fn strategy_view(candidates: &[Candidate], strategy: &str) -> Vec<Candidate> {
    let mut own: Vec<(usize, &Candidate)> = candidates
        .iter()
        .filter_map(|c| c.strategies.get(strategy).map(|&r| (r, c)))
        .collect();
    own.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.text.cmp(&b.1.text)));
    own.into_iter().map(|(_, c)| c.clone()).collect()
}

/// Replays stored files with lists produced by `make_list` from each
/// position's stored candidates.
pub fn replay_store<F>(files: &[StoredFile], mut make_list: F) -> Result<Vec<SessionLedger>>
where
    F: FnMut(&str, &[Candidate]) -> Result<CompletionList>,
{
    files
        .iter()
        .map(|f| {
            let by_pos: BTreeMap<usize, Vec<Candidate>> = f
                .samples
                .iter()
                .map(|s| (s.pos, s.candidates.iter().map(|c| c.candidate.clone()).collect()))
                .collect();
            replay(&f.id, &f.truth, |pos, ctx| {
                let cands = by_pos.get(&pos).map(Vec::as_slice).unwrap_or(&[]);
                make_list(ctx, cands)
            })
        })
        .collect()
}

/// `(position, cost)` rows.
pub fn cost_spectrum_csv(ledger: &SessionLedger) -> String {
    let mut out = String::from("position,cost\n");
    for (i, c) in ledger.costs.iter().enumerate() {
        let _ = writeln!(out, "{i},{c}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AblationRow {
    pub pipeline: String,
    pub metrics: Metrics,
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.6}"))
}

pub fn ablation_csv(rows: &[AblationRow]) -> String {
    let mut out = String::from("pipeline,accuracy_at_1,accuracy_at_5,benefit,hidden_cost,bcr,invalid_list_rate,shown\n");
    for r in rows {
        let m = &r.metrics;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.pipeline,
            fmt_opt(m.accuracy_at_1),
            fmt_opt(m.accuracy_at_5),
            m.benefit,
            m.hidden_cost,
            fmt_opt(m.bcr),
            fmt_opt(m.invalid_list_rate),
            m.shown
        );
    }
    out
}

pub fn characteristics_csv(rows: &[Characteristics]) -> String {
    let mut out = String::from("strategy,occurrence_rate,hit_position_p90,prefix_length,completeness,accuracy_at_1,accuracy_at_5\n");
    for c in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            c.strategy,
            fmt_opt(c.occurrence_rate),
            c.hit_position_p90.map_or("n/a".to_string(), |v| v.to_string()),
            fmt_opt(c.prefix_length),
            fmt_opt(c.completeness),
            fmt_opt(c.accuracy_at_1),
            fmt_opt(c.accuracy_at_5)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::RankMode;
    use crate::strategy::LM;

    fn list(texts: &[&str], accepted: bool) -> CompletionList {
        CompletionList {
            candidates: texts
                .iter()
                .enumerate()
                .map(|(i, t)| RankedCandidate {
                    candidate: Candidate::new(*t, LM, i + 1),
                    final_score: -(i as f64),
                })
                .collect(),
            mode: RankMode::Unranked,
            accepted,
            acceptance_probability: None,
        }
    }

    #[test]
    fn length_fourteen_walkthrough() {
        let text = "x = DefaultEntries;";
        let l = replay("f", text, |pos, _| Ok(if pos == 4 { list(&["DefaultEntries"], true) } else { list(&[], false) })).unwrap();
        let ls = [l];
        assert_eq!(benefit(&ls), 13);
        assert_eq!(hidden_cost(&ls), 1);
        assert_eq!(bcr(&ls), Some(13.0));
        assert_eq!(ls[0].costs.iter().filter(|&&c| c == 0).count(), 13);
        assert_eq!(ls[0].costs[4], 1);
    }

    #[test]
    fn never_fires() {
        let l = replay("f", "abc", |_, _| Ok(list(&[], false))).unwrap();
        assert_eq!(l.n_cc, l.n_ori);
        assert!(l.events.is_empty());
        let ls = [l];
        assert_eq!(benefit(&ls), 0);
        assert_eq!(bcr(&ls), None);
        assert_eq!(accuracy_at_k(&ls, 1).unwrap(), None);
        assert!(accuracy_at_k(&ls, 0).is_err());
    }

    #[test]
    fn two_completions_in_hundred_chars() {
        let text: String = "abcd".to_string() + &"-".repeat(50) + "efghij" + &"-".repeat(40);
        assert_eq!(text.len(), 100);
        let l = replay("f", &text, |pos, _| {
            Ok(match pos {
                0 => list(&["abcd"], true),
                54 => list(&["efghij"], true),
                _ => list(&[], false),
            })
        })
        .unwrap();
        assert_eq!(benefit(&[l.clone()]), 8);
        assert_eq!(l.n_cc + 3 + 5, l.n_ori);
    }

    #[test]
    fn accuracy_by_hand() {
        let mk = |hits: Vec<usize>| CompletionEvent {
            position: 0,
            shown: true,
            list_length: 5,
            chosen_rank: hits.first().copied(),
            chosen_length: hits.first().map(|_| 2),
            hit_positions: hits,
            prefix_length: 0,
            completes_token: None,
        };
        let l = SessionLedger {
            file: "f".into(),
            n_ori: 10,
            n_cc: 10,
            events: vec![mk(vec![1]), mk(vec![3]), mk(vec![])],
            costs: vec![1; 10],
        };
        let ls = [l];
        assert_eq!(accuracy_at_k(&ls, 1).unwrap(), Some(1.0 / 3.0));
        assert_eq!(accuracy_at_k(&ls, 5).unwrap(), Some(2.0 / 3.0));
        assert_eq!(hidden_cost(&ls), 1 + 3 + 5);
    }

    #[test]
    fn longest_answer_sets_browse_cost() {
        // correct answers at ranks 2 (len 3) and 4 (len 9)
        let text = "abcdefghi;";
        let l = replay("f", text, |pos, _| Ok(if pos == 0 { list(&["x", "abc", "y", "abcdefghi", "z"], true) } else { list(&[], false) })).unwrap();
        assert_eq!(l.events[0].hit_positions, [2, 4]);
        assert_eq!(hidden_cost(&[l.clone()]), 4);
        assert_eq!(l.costs[0], 4);
    }

    #[test]
    fn spectrum_values() {
        let text = "ab cd";
        let l = replay("f", text, |pos, _| {
            Ok(match pos {
                0 => list(&["q", "w", "e", "r", "t"], true),
                1 => list(&["x"], false),
                _ => list(&[], false),
            })
        })
        .unwrap();
        assert_eq!(l.costs, [6, 1, 1, 1, 1]);
        assert!(l.costs.iter().all(|&c| c <= MAX_COST));
        assert_eq!(invalid_list_rate(&[l]), Some(1.0));
    }

    #[test]
    fn quantiles() {
        assert_eq!(nearest_rank(&[1, 1, 2, 5], 0.9), Some(5));
        assert_eq!(nearest_rank(&[], 0.9), None);
        assert_eq!(nearest_rank(&[3], 0.9), Some(3));
    }

    #[test]
    fn characteristic_rates() {
        let text = "foo(bar);";
        let l = replay("f", text, |pos, _| Ok(if pos == 0 { list(&["foo"], true) } else { list(&[], false) })).unwrap();
        let c = characteristics(LM, &[l]);
        assert_eq!(c.completeness, Some(1.0));
        assert_eq!(c.hit_position_p90, Some(1));
        assert_eq!(c.prefix_length, Some(0.0));
        // positions visited: 0 (accept 3), then 3..9 typed
        assert_eq!(c.occurrence_rate, Some(1.0 / 7.0));
    }
}
