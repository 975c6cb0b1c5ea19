//! Gradient-boosted trees, the z-score scaler, and the datasets both
//! models are trained on.

mod dataset;
mod gbdt;
mod scaler;

pub use dataset::{make_acceptance_dataset, make_ranking_dataset, score_dimension_values, AcceptanceOptions, Dataset};
pub use gbdt::{GbdtModel, GbdtParams, Node, Objective, Tree};
pub use scaler::{DimStats, ScalerModel};
