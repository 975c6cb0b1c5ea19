//! The runtime pipeline: gather, merge, gate, rank.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feature::{candidate_schema, extract_candidate, extract_context, extract_set, ContextFeatures};
use crate::learn::{GbdtModel, ScalerModel};
use crate::strategy::{primary_dimension, Candidate, Session, CANDIDATE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    Fusion,
    Normalized,
    Unranked,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    /// Acceptance threshold θ: 0 never blocks, 1 always blocks.
    pub threshold: f64,
    /// Consult the acceptance model at all.
    pub gate: bool,
    pub mode: RankMode,
    pub cap: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            threshold: 0.5,
            gate: true,
            mode: RankMode::Fusion,
            cap: CANDIDATE_CAP,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(Error::Config(format!("acceptance threshold {} is outside [0, 1]", self.threshold)));
        }
        if self.cap == 0 || self.cap > CANDIDATE_CAP {
            return Err(Error::Config(format!("list cap must be in 1..={CANDIDATE_CAP}")));
        }
        Ok(())
    }
}

/// Trained models the pipeline may use; any of them can be absent.
#[derive(Debug, Clone, Default)]
pub struct Models {
    pub acceptance: Option<GbdtModel>,
    pub ranker: Option<GbdtModel>,
    pub scaler: Option<ScalerModel>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedCandidate {
    #[serde(flatten)]
    pub candidate: Candidate,
    pub final_score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletionList {
    /// Best first.
    pub candidates: Vec<RankedCandidate>,
    pub mode: RankMode,
    /// False when the list is blocked; the candidates are kept for audit.
    pub accepted: bool,
    pub acceptance_probability: Option<f64>,
}

impl CompletionList {
    pub fn empty(mode: RankMode) -> Self {
        CompletionList {
            candidates: Vec::new(),
            mode,
            accepted: false,
            acceptance_probability: None,
        }
    }

    /// The list a user would see.
    pub fn shown(&self) -> &[RankedCandidate] {
        if self.accepted {
            &self.candidates
        } else {
            &[]
        }
    }
}

/// Threshold rule of the gate.
pub fn gate_accepts(probability: f64, threshold: f64) -> bool {
    if threshold <= 0.0 {
        true
    } else if threshold >= 1.0 {
        false
    } else {
        probability >= threshold
    }
}

/// Scores each candidate by the z-score of its strategy's primary
/// dimension, taking the best one when several strategies proposed it.
/// Equal scores keep the input order.
pub fn rank_normalized(candidates: &[Candidate], scaler: &ScalerModel) -> Vec<RankedCandidate> {
    let mut out: Vec<RankedCandidate> = candidates
        .iter()
        .map(|c| {
            let z = c
                .strategies
                .keys()
                .map(|s| {
                    let Some(dim) = primary_dimension(s) else { return 0.0 };
                    let Some(x) = c.score(dim) else { return 0.0 };
                    scaler.apply(dim, x).unwrap_or_else(|| {
                        log::warn!("no scaler statistics for {dim}; using 0");
                        0.0
                    })
                })
                .fold(f64::NEG_INFINITY, f64::max);
            RankedCandidate {
                candidate: c.clone(),
                final_score: if z.is_finite() { z } else { 0.0 },
            }
        })
        .collect();
    out.sort_by(|a, b| b.final_score.total_cmp(&a.final_score));
    out
}

fn tie_break(a: &RankedCandidate, b: &RankedCandidate) -> std::cmp::Ordering {
    b.final_score
        .total_cmp(&a.final_score)
        .then(a.candidate.len().cmp(&b.candidate.len()))
        .then_with(|| a.candidate.text.cmp(&b.candidate.text))
}

/// Orders candidates by the regressor's expected accepted length; equal
/// scores go to the shorter, then lexicographically smaller text.
pub fn rank_fusion(ctx: &ContextFeatures, candidates: &[Candidate], regressor: &GbdtModel) -> Result<Vec<RankedCandidate>> {
    let mut out = candidates
        .iter()
        .map(|c| {
            let v = extract_candidate(ctx, c);
            candidate_schema().check(&v)?;
            Ok(RankedCandidate {
                candidate: c.clone(),
                final_score: regressor.predict(&v)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(tie_break);
    Ok(out)
}

/// Gate and rank an already merged candidate set for the text before the
/// cursor.
pub fn complete_merged(context: &str, merged: &[Candidate], models: &Models, cfg: &PipelineConfig) -> Result<CompletionList> {
    if merged.is_empty() {
        return Ok(CompletionList::empty(cfg.mode));
    }
    let ctx = extract_context(context);
    let mut probability = None;
    let mut accepted = true;
    if cfg.gate {
        if let Some(model) = &models.acceptance {
            let p = model.predict_proba(&extract_set(&ctx, merged))?;
            probability = Some(p);
            accepted = gate_accepts(p, cfg.threshold);
        }
    }
    let mut ranked = match cfg.mode {
        RankMode::Fusion => {
            let ranker = models.ranker.as_ref().ok_or_else(|| Error::Config("fusion mode needs a ranking model".into()))?;
            rank_fusion(&ctx, merged, ranker)?
        }
        RankMode::Normalized => {
            let scaler = models.scaler.as_ref().ok_or_else(|| Error::Config("normalized mode needs a scaler".into()))?;
            rank_normalized(merged, scaler)
        }
        RankMode::Unranked => merged
            .iter()
            .enumerate()
            .map(|(i, c)| RankedCandidate {
                candidate: c.clone(),
                final_score: -(i as f64),
            })
            .collect(),
    };
    ranked.truncate(cfg.cap);
    Ok(CompletionList {
        candidates: ranked,
        mode: cfg.mode,
        accepted,
        acceptance_probability: probability,
    })
}

/// Queries the session's strategies, then gates and ranks.
pub fn complete(context: &str, session: &mut Session<'_>, models: &Models, cfg: &PipelineConfig) -> Result<CompletionList> {
    cfg.validate()?;
    let gathered = session.query(context)?;
    complete_merged(context, &gathered.merged, models, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::learn::{GbdtParams, Objective};
    use crate::strategy::{DIM_GLOBAL_COUNT, DIM_LM_LOGPROB, DIM_LOCAL_COUNT, GLOBAL, LM, LOCAL};
    use std::collections::BTreeMap;

    fn scaler() -> ScalerModel {
        ScalerModel::fit(&BTreeMap::from([
            (DIM_GLOBAL_COUNT.to_string(), vec![0.0, 10.0, 20.0]),
            (DIM_LOCAL_COUNT.to_string(), vec![1.0, 2.0, 3.0]),
            (DIM_LM_LOGPROB.to_string(), vec![-4.0, -2.0]),
        ]))
    }

    #[test]
    fn gate_extremes() {
        assert!(gate_accepts(0.0, 0.0));
        assert!(!gate_accepts(1.0, 1.0));
        assert!(gate_accepts(0.6, 0.5));
        assert!(!gate_accepts(0.4, 0.5));
    }

    #[test]
    fn normalized_order_by_hand() {
        let cands = vec![
            Candidate::new("a", GLOBAL, 1).with_score(DIM_GLOBAL_COUNT, 10.0), // z 0
            Candidate::new("b", LOCAL, 1).with_score(DIM_LOCAL_COUNT, 3.0),    // z 1.2247
            Candidate::new("c", LM, 1).with_score(DIM_LM_LOGPROB, -4.0),       // z -1
            Candidate::new("d", GLOBAL, 2).with_score(DIM_GLOBAL_COUNT, 0.0),  // z -1.2247
            Candidate::new("e", LM, 2).with_score(DIM_LM_LOGPROB, -2.5),       // z 0.5
        ];
        let order: Vec<String> = rank_normalized(&cands, &scaler()).into_iter().map(|r| r.candidate.text).collect();
        assert_eq!(order, ["b", "e", "a", "c", "d"]);
    }

    #[test]
    fn normalized_uses_best_strategy() {
        let mut both = Candidate::new("x", GLOBAL, 1).with_score(DIM_GLOBAL_COUNT, 0.0);
        both.strategies.insert(LOCAL.into(), 1);
        both.scores.insert(DIM_LOCAL_COUNT.into(), 3.0);
        let r = rank_normalized(&[both], &scaler());
        assert!((r[0].final_score - 1.2247).abs() < 1e-4);
    }

    #[test]
    fn constant_dimensions_keep_order() {
        let flat = ScalerModel::fit(&BTreeMap::from([(DIM_GLOBAL_COUNT.to_string(), vec![2.0, 2.0])]));
        let cands: Vec<Candidate> = ["q", "a", "m"]
            .iter()
            .enumerate()
            .map(|(i, t)| Candidate::new(*t, GLOBAL, i + 1).with_score(DIM_GLOBAL_COUNT, 9.0))
            .collect();
        let order: Vec<String> = rank_normalized(&cands, &flat).into_iter().map(|r| r.candidate.text).collect();
        assert_eq!(order, ["q", "a", "m"]);
    }

    fn length_regressor() -> GbdtModel {
        // target = candidate length, learned from a small grid
        let ctx = extract_context("x = ");
        let lens = [1usize, 3, 5, 9, 14];
        let mut x = Vec::new();
        let mut y = Vec::new();
        for &n in &lens {
            for _ in 0..4 {
                x.push(extract_candidate(&ctx, &Candidate::new("a".repeat(n), LM, 1)));
                y.push(n as f64);
            }
        }
        let p = GbdtParams {
            min_samples_leaf: 1,
            ..GbdtParams::default()
        };
        GbdtModel::fit(&x, &y, Objective::SquaredError, &p, candidate_schema()).unwrap()
    }

    #[test]
    fn fusion_prefers_longer_correct() {
        let reg = length_regressor();
        let ctx = extract_context("x = ");
        let long = Candidate::new("DefaultEntries", LM, 2);
        let short = Candidate::new("Def", LM, 1);
        let r = rank_fusion(&ctx, &[short.clone(), long.clone()], &reg).unwrap();
        assert_eq!(r[0].candidate.text, "DefaultEntries");
        let again = rank_fusion(&ctx, &[long, short], &reg).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn empty_input_is_blocked() {
        let list = complete_merged("", &[], &Models::default(), &PipelineConfig::default()).unwrap();
        assert!(!list.accepted);
        assert!(list.candidates.is_empty());
    }

    #[test]
    fn threshold_extremes_with_model() {
        let x = vec![vec![0.0; crate::feature::set_schema().len()]; 4];
        let acc = GbdtModel::fit_rows(&x, &[1.0, 0.0, 1.0, 0.0], Objective::Logistic, &GbdtParams::default(), Some(crate::feature::set_schema())).unwrap();
        let models = Models {
            acceptance: Some(acc),
            ranker: None,
            scaler: Some(scaler()),
        };
        let cands = vec![Candidate::new("abc", GLOBAL, 1).with_score(DIM_GLOBAL_COUNT, 3.0)];
        let mut cfg = PipelineConfig {
            mode: RankMode::Normalized,
            threshold: 0.0,
            ..PipelineConfig::default()
        };
        assert!(complete_merged("ab", &cands, &models, &cfg).unwrap().accepted);
        cfg.threshold = 1.0;
        let blocked = complete_merged("ab", &cands, &models, &cfg).unwrap();
        assert!(!blocked.accepted);
        assert_eq!(blocked.candidates.len(), 1);
        assert!(blocked.shown().is_empty());
    }
}
