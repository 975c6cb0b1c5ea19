//! Depth-bounded gradient boosting with exact greedy splits.
//!
//! Trees are grown level by level from columns sorted once up front. Leaf
//! values are Newton steps `-G / (H + l2)`. Among equal-gain splits the
//! lowest feature index wins, then the lowest threshold, so fits are
//! reproducible bit for bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feature::{FeatureSchema, FeatureVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Logistic,
    SquaredError,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GbdtParams {
    pub n_trees: usize,
    pub max_depth: usize,
    pub learning_rate: f64,
    pub min_samples_leaf: usize,
    pub l2: f64,
    /// Weight of positive samples under the logistic objective; `None`
    /// means `#neg / #pos`.
    pub positive_weight: Option<f64>,
}

impl Default for GbdtParams {
    fn default() -> Self {
        GbdtParams {
            n_trees: 100,
            max_depth: 6,
            learning_rate: 0.1,
            min_samples_leaf: 20,
            l2: 1.0,
            positive_weight: None,
        }
    }
}

impl GbdtParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0) || self.max_depth == 0 || self.min_samples_leaf == 0 || self.l2 < 0.0 {
            return Err(Error::Config(
                "gbdt params need learning_rate > 0, max_depth >= 1, min_samples_leaf >= 1, l2 >= 0".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Node {
    Split {
        feature: usize,
        /// values `<= threshold` go left
        threshold: f64,
        left: usize,
        right: usize,
    },
    Leaf {
        value: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tree {
    /// Root at index 0.
    pub nodes: Vec<Node>,
}

impl Tree {
    pub fn predict(&self, x: &[f64]) -> f64 {
        let mut i = 0;
        loop {
            match self.nodes[i] {
                Node::Leaf { value } => return value,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => i = if x[feature] <= threshold { left } else { right },
            }
        }
    }

    fn scale(&mut self, by: f64) {
        for n in &mut self.nodes {
            if let Node::Leaf { value } = n {
                *value *= by;
            }
        }
    }

    pub fn split_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Split { .. })).count()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GbdtModel {
    pub objective: Objective,
    pub base_score: f64,
    pub learning_rate: f64,
    pub trees: Vec<Tree>,
    pub schema_version: String,
    pub feature_names: Vec<String>,
    pub params: GbdtParams,
    /// Training loss before the first tree and after each kept tree.
    pub loss_history: Vec<f64>,
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Weighted mean training loss at raw scores `f`.
fn loss(objective: Objective, f: &[f64], y: &[f64], w: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut wsum = 0.0;
    for i in 0..f.len() {
        let l = match objective {
            // log(1 + e^f) - y f, computed stably
            Objective::Logistic => f[i].max(0.0) + (-f[i].abs()).exp().ln_1p() - y[i] * f[i],
            Objective::SquaredError => 0.5 * (f[i] - y[i]) * (f[i] - y[i]),
        };
        total += w[i] * l;
        wsum += w[i];
    }
    total / wsum
}

#[derive(Clone, Copy, Default)]
struct Stats {
    g: f64,
    h: f64,
    n: usize,
}

impl Stats {
    fn add(&mut self, g: f64, h: f64) {
        self.g += g;
        self.h += h;
        self.n += 1;
    }
}

#[derive(Clone, Copy)]
struct Best {
    gain: f64,
    feature: usize,
    threshold: f64,
}

struct Grower<'a> {
    x: &'a [Vec<f64>],
    /// per feature, sample indices sorted by value then index
    sorted: &'a [Vec<u32>],
    params: &'a GbdtParams,
}

impl Grower<'_> {
    fn leaf_value(&self, s: Stats) -> f64 {
        if s.h + self.params.l2 <= 0.0 {
            return 0.0;
        }
        -s.g / (s.h + self.params.l2)
    }

    fn score(&self, g: f64, h: f64) -> f64 {
        let d = h + self.params.l2;
        if d <= 0.0 {
            0.0
        } else {
            g * g / d
        }
    }

    fn grow(&self, grad: &[f64], hess: &[f64]) -> Tree {
        let n = grad.len();
        let mut nodes = vec![Node::Leaf { value: 0.0 }];
        let mut node_of: Vec<usize> = vec![0; n];
        let mut totals = vec![Stats::default()];
        for i in 0..n {
            totals[0].add(grad[i], hess[i]);
        }
        let mut frontier = vec![0usize];
        let min_leaf = self.params.min_samples_leaf;
        for _depth in 0..self.params.max_depth {
            // slot of each node in this level's scan, usize::MAX when frozen
            let mut slot = vec![usize::MAX; nodes.len()];
            let mut active = Vec::new();
            for &nd in &frontier {
                if totals[nd].n >= 2 * min_leaf {
                    slot[nd] = active.len();
                    active.push(nd);
                }
            }
            if active.is_empty() {
                break;
            }
            let mut best: Vec<Option<Best>> = vec![None; active.len()];
            let mut left = vec![Stats::default(); active.len()];
            let mut last = vec![f64::NAN; active.len()];
            for (f, order) in self.sorted.iter().enumerate() {
                left.iter_mut().for_each(|s| *s = Stats::default());
                last.iter_mut().for_each(|v| *v = f64::NAN);
                for &i in order {
                    let i = i as usize;
                    let a = slot[node_of[i]];
                    if a == usize::MAX {
                        continue;
                    }
                    let v = self.x[i][f];
                    let l = left[a];
                    if l.n >= min_leaf && v != last[a] {
                        let total = totals[active[a]];
                        if total.n - l.n >= min_leaf {
                            let (gr, hr) = (total.g - l.g, total.h - l.h);
                            let gain = 0.5 * (self.score(l.g, l.h) + self.score(gr, hr) - self.score(total.g, total.h));
                            if gain > 1e-12 && best[a].is_none_or(|b| gain > b.gain) {
                                best[a] = Some(Best {
                                    gain,
                                    feature: f,
                                    threshold: last[a],
                                });
                            }
                        }
                    }
                    left[a].add(grad[i], hess[i]);
                    last[a] = v;
                }
            }
            let mut next_frontier = Vec::new();
            for (a, &nd) in active.iter().enumerate() {
                let Some(b) = best[a] else { continue };
                let l = nodes.len();
                nodes.push(Node::Leaf { value: 0.0 });
                nodes.push(Node::Leaf { value: 0.0 });
                totals.push(Stats::default());
                totals.push(Stats::default());
                nodes[nd] = Node::Split {
                    feature: b.feature,
                    threshold: b.threshold,
                    left: l,
                    right: l + 1,
                };
                next_frontier.push(l);
                next_frontier.push(l + 1);
            }
            if next_frontier.is_empty() {
                break;
            }
            for i in 0..n {
                if let Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } = nodes[node_of[i]]
                {
                    let to = if self.x[i][feature] <= threshold { left } else { right };
                    node_of[i] = to;
                    totals[to].add(grad[i], hess[i]);
                }
            }
            frontier = next_frontier;
        }
        for (nd, node) in nodes.iter_mut().enumerate() {
            if let Node::Leaf { value } = node {
                *value = self.leaf_value(totals[nd]);
            }
        }
        Tree { nodes }
    }
}

impl GbdtModel {
    /// Fits on raw rows. Classification targets must be 0 or 1.
    pub fn fit_rows(x: &[Vec<f64>], y: &[f64], objective: Objective, params: &GbdtParams, schema: Option<&FeatureSchema>) -> Result<Self> {
        params.validate()?;
        if x.is_empty() || x.len() != y.len() {
            return Err(Error::InvalidArgument(format!("{} rows but {} targets", x.len(), y.len())));
        }
        let width = x[0].len();
        if x.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidArgument("rows differ in length".into()));
        }
        if let Some(s) = schema {
            if s.len() != width {
                return Err(Error::SchemaMismatch {
                    expected: s.version.clone(),
                    found: format!("{width} columns"),
                });
            }
        }
        if x.iter().flatten().chain(y).any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite feature or target".into()));
        }
        if objective == Objective::Logistic && y.iter().any(|&t| t != 0.0 && t != 1.0) {
            return Err(Error::InvalidArgument("classification targets must be 0 or 1".into()));
        }
        let n = x.len();
        let weights: Vec<f64> = match objective {
            Objective::SquaredError => vec![1.0; n],
            Objective::Logistic => {
                let pos = y.iter().filter(|&&t| t == 1.0).count();
                let neg = n - pos;
                let wp = match params.positive_weight {
                    Some(w) => w,
                    None if pos > 0 && neg > 0 => neg as f64 / pos as f64,
                    None => 1.0,
                };
                y.iter().map(|&t| if t == 1.0 { wp } else { 1.0 }).collect()
            }
        };
        let wsum: f64 = weights.iter().sum();
        let mean = weights.iter().zip(y).map(|(w, t)| w * t).sum::<f64>() / wsum;
        let base_score = match objective {
            Objective::SquaredError => mean,
            Objective::Logistic => {
                let p = mean.clamp(1e-6, 1.0 - 1e-6);
                (p / (1.0 - p)).ln()
            }
        };

        let sorted: Vec<Vec<u32>> = (0..width)
            .map(|f| {
                let mut idx: Vec<u32> = (0..n as u32).collect();
                idx.sort_by(|&a, &b| x[a as usize][f].total_cmp(&x[b as usize][f]).then(a.cmp(&b)));
                idx
            })
            .collect();
        let grower = Grower {
            x,
            sorted: &sorted,
            params,
        };

        let mut f = vec![base_score; n];
        let mut current = loss(objective, &f, y, &weights);
        let mut model = GbdtModel {
            objective,
            base_score,
            learning_rate: params.learning_rate,
            trees: Vec::new(),
            schema_version: schema.map(|s| s.version.clone()).unwrap_or_default(),
            feature_names: schema.map(|s| s.names().map(String::from).collect()).unwrap_or_default(),
            params: params.clone(),
            loss_history: vec![current],
        };
        let mut grad = vec![0.0; n];
        let mut hess = vec![0.0; n];
        for _ in 0..params.n_trees {
            for i in 0..n {
                let (g, h) = match objective {
                    Objective::SquaredError => (f[i] - y[i], 1.0),
                    Objective::Logistic => {
                        let p = sigmoid(f[i]);
                        (p - y[i], (p * (1.0 - p)).max(1e-16))
                    }
                };
                grad[i] = weights[i] * g;
                hess[i] = weights[i] * h;
            }
            if grad.iter().all(|g| g.abs() < 1e-15) {
                break;
            }
            let mut tree = grower.grow(&grad, &hess);
            if tree.split_count() == 0 && tree.predict(&x[0]).abs() < 1e-12 {
                break;
            }
            // keep the loss monotone: shrink a tree that overshoots
            let mut accepted = None;
            for _ in 0..30 {
                let trial: Vec<f64> = (0..n).map(|i| f[i] + params.learning_rate * tree.predict(&x[i])).collect();
                let l = loss(objective, &trial, y, &weights);
                if l <= current {
                    accepted = Some((trial, l));
                    break;
                }
                tree.scale(0.5);
            }
            let Some((trial, l)) = accepted else { break };
            f = trial;
            current = l;
            model.trees.push(tree);
            model.loss_history.push(current);
        }
        Ok(model)
    }

    pub fn fit(samples: &[FeatureVector], targets: &[f64], objective: Objective, params: &GbdtParams, schema: &FeatureSchema) -> Result<Self> {
        for s in samples {
            schema.check(s)?;
        }
        let rows: Vec<Vec<f64>> = samples.iter().map(|s| s.values.clone()).collect();
        Self::fit_rows(&rows, targets, objective, params, Some(schema))
    }

    /// Raw additive score: `base_score + lr * sum of leaf values`.
    pub fn raw_score(&self, x: &[f64]) -> f64 {
        self.base_score + self.learning_rate * self.trees.iter().map(|t| t.predict(x)).sum::<f64>()
    }

    fn check(&self, v: &FeatureVector) -> Result<()> {
        if !self.schema_version.is_empty() && v.version != self.schema_version {
            return Err(Error::SchemaMismatch {
                expected: self.schema_version.clone(),
                found: v.version.clone(),
            });
        }
        if !self.feature_names.is_empty() && v.values.len() != self.feature_names.len() {
            return Err(Error::SchemaMismatch {
                expected: format!("{} features", self.feature_names.len()),
                found: format!("{} features", v.values.len()),
            });
        }
        Ok(())
    }

    /// Raw score for regression, probability for classification.
    pub fn predict_row(&self, x: &[f64]) -> f64 {
        let s = self.raw_score(x);
        match self.objective {
            Objective::SquaredError => s,
            Objective::Logistic => sigmoid(s),
        }
    }

    pub fn predict(&self, v: &FeatureVector) -> Result<f64> {
        self.check(v)?;
        Ok(self.raw_score(&v.values))
    }

    pub fn predict_proba(&self, v: &FeatureVector) -> Result<f64> {
        self.check(v)?;
        Ok(sigmoid(self.raw_score(&v.values)))
    }

    /// Number of splits on each feature across all trees.
    pub fn feature_importance(&self) -> Vec<usize> {
        let width = self.feature_names.len().max(
            self.trees
                .iter()
                .flat_map(|t| &t.nodes)
                .filter_map(|n| match n {
                    Node::Split { feature, .. } => Some(feature + 1),
                    Node::Leaf { .. } => None,
                })
                .max()
                .unwrap_or(0),
        );
        let mut counts = vec![0; width];
        for t in &self.trees {
            for n in &t.nodes {
                if let Node::Split { feature, .. } = n {
                    counts[*feature] += 1;
                }
            }
        }
        counts
    }

    /// Importance keyed by feature name, most used first.
    pub fn named_importance(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = self
            .feature_importance()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (self.feature_names.get(i).cloned().unwrap_or_else(|| format!("f{i}")), c))
            .collect();
        out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: GbdtModel = serde_json::from_str(text)?;
        let width = m.feature_names.len();
        for t in &m.trees {
            for n in &t.nodes {
                if let Node::Split { feature, left, right, .. } = *n {
                    if (width > 0 && feature >= width) || left >= t.nodes.len() || right >= t.nodes.len() {
                        return Err(Error::Model("tree references a missing feature or node".into()));
                    }
                }
            }
        }
        Ok(m)
    }
}
