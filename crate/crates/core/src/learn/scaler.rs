//! Per-dimension z-scores for the normalized ranking baseline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Below this a dimension is treated as constant.
const MIN_STDDEV: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimStats {
    pub mean: f64,
    /// Population standard deviation.
    pub stddev: f64,
}

impl DimStats {
    pub fn fit(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        Some(DimStats {
            mean,
            stddev: var.sqrt(),
        })
    }

    pub fn is_constant(&self) -> bool {
        self.stddev < MIN_STDDEV
    }

    pub fn apply(&self, x: f64) -> f64 {
        if self.is_constant() {
            0.0
        } else {
            (x - self.mean) / self.stddev
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ScalerModel {
    pub dims: BTreeMap<String, DimStats>,
}

impl ScalerModel {
    /// Fits every dimension that has at least one value.
    pub fn fit(values: &BTreeMap<String, Vec<f64>>) -> Self {
        ScalerModel {
            dims: values
                .iter()
                .filter_map(|(d, v)| DimStats::fit(v).map(|s| (d.clone(), s)))
                .collect(),
        }
    }

    /// z-score of `x` on dimension `dim`; `None` when the dimension was not
    /// fitted.
    pub fn apply(&self, dim: &str, x: f64) -> Option<f64> {
        self.dims.get(dim).map(|s| s.apply(x))
    }

    /// Fits on `values` and scales them in one go.
    pub fn fit_apply(values: &[f64]) -> Vec<f64> {
        match DimStats::fit(values) {
            Some(s) => values.iter().map(|&v| s.apply(v)).collect(),
            None => Vec::new(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
