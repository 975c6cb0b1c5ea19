//! Training sets for the acceptance and ranking models, derived from the
//! sample store.

use std::collections::BTreeMap;

use crate::feature::{extract_candidate, extract_context, extract_set, FeatureVector};
use crate::simulate::{char_offsets, StoredFile};
use crate::strategy::primary_dimension;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Dataset {
    pub x: Vec<FeatureVector>,
    pub y: Vec<f64>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn positives(&self) -> usize {
        self.y.iter().filter(|&&t| t > 0.0).count()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AcceptanceOptions {
    /// Keep positions without candidates as negatives.
    pub include_empty: bool,
}

/// One set-level sample per critical position; label 1 when any candidate
/// hits. Context features see only the file text before the cursor.
pub fn make_acceptance_dataset(files: &[StoredFile], opts: AcceptanceOptions) -> Dataset {
    let mut out = Dataset::default();
    for f in files {
        let offsets = char_offsets(&f.truth);
        for s in f.samples.iter().filter(|s| s.critical) {
            if s.candidates.is_empty() && !opts.include_empty {
                continue;
            }
            let Some(&b) = offsets.get(s.pos) else { continue };
            let ctx = extract_context(&f.truth[..b]);
            let cands: Vec<_> = s.candidates.iter().map(|c| c.candidate.clone()).collect();
            out.x.push(extract_set(&ctx, &cands));
            out.y.push(s.has_hit() as u8 as f64);
        }
    }
    out
}

/// One candidate-level sample per candidate at critical positions that
/// have at least one hit; the target is the candidate length for hits and
/// 0 otherwise.
pub fn make_ranking_dataset(files: &[StoredFile]) -> Dataset {
    let mut out = Dataset::default();
    for f in files {
        let offsets = char_offsets(&f.truth);
        for s in f.samples.iter().filter(|s| s.critical && s.has_hit()) {
            let Some(&b) = offsets.get(s.pos) else { continue };
            let ctx = extract_context(&f.truth[..b]);
            for c in &s.candidates {
                out.x.push(extract_candidate(&ctx, &c.candidate));
                out.y.push(if c.hit { c.candidate.len() as f64 } else { 0.0 });
            }
        }
    }
    out
}

/// Primary-dimension scores of every candidate at critical positions,
/// grouped by dimension; the input the normalizing scaler is fitted on.
pub fn score_dimension_values(files: &[StoredFile]) -> BTreeMap<String, Vec<f64>> {
    let mut dims: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for s in files.iter().flat_map(|f| &f.samples).filter(|s| s.critical) {
        for c in &s.candidates {
            for strategy in c.candidate.strategies.keys() {
                let Some(dim) = primary_dimension(strategy) else { continue };
                if let Some(v) = c.candidate.score(dim) {
                    dims.entry(dim.to_string()).or_default().push(v);
                }
            }
        }
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::{LabeledCandidate, SimulationSample};
    use crate::strategy::{Candidate, LM};

    fn sample(pos: usize, cands: &[(&str, bool)]) -> SimulationSample {
        SimulationSample {
            file: "f".into(),
            pos,
            critical: true,
            candidates: cands
                .iter()
                .enumerate()
                .map(|(i, &(t, hit))| LabeledCandidate {
                    candidate: Candidate::new(t, LM, i + 1),
                    hit,
                })
                .collect(),
        }
    }

    fn store() -> Vec<StoredFile> {
        let truth = "DefaultEntries x;".to_string();
        vec![StoredFile {
            id: "f".into(),
            samples: vec![
                sample(0, &[("Default", false), ("DefaultEntries", true), ("a", false), ("b", false), ("c", false)]),
                sample(1, &[("zz", false)]),
                sample(2, &[]),
            ],
            truth,
        }]
    }

    #[test]
    fn acceptance_labels() {
        let d = make_acceptance_dataset(&store(), AcceptanceOptions::default());
        assert_eq!(d.y, [1.0, 0.0]);
        let all = make_acceptance_dataset(&store(), AcceptanceOptions { include_empty: true });
        assert_eq!(all.y, [1.0, 0.0, 0.0]);
    }

    #[test]
    fn ranking_targets() {
        let d = make_ranking_dataset(&store());
        assert_eq!(d.y, [0.0, 14.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn non_critical_ignored() {
        let mut s = store();
        s[0].samples.iter_mut().for_each(|x| x.critical = false);
        assert!(make_acceptance_dataset(&s, AcceptanceOptions::default()).is_empty());
        assert!(make_ranking_dataset(&s).is_empty());
    }
}
