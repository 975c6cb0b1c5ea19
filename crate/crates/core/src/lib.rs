//! Ensemble code completion.
//!
//! Several completion strategies (global sub-token frequency, local file
//! frequency, an n-gram line model) are queried at the cursor, their
//! candidates merged, an acceptance model decides whether the merged list is
//! worth showing, and a fusion ranker orders the survivors by expected
//! keystroke benefit. The [`simulate`] and [`eval`] modules replay typing over
//! source files to produce training data and Benefit-Cost-Ratio reports.

pub mod corpus;
pub mod ensemble;
pub mod error;
pub mod eval;
pub mod feature;
pub mod hash;
pub mod learn;
pub mod lexer;
pub mod simulate;
pub mod strategy;

pub use error::{Error, Result};
