//! Cross-problem QAOA parameter transfer at desk scale.
//!
//! The crate covers the full pipeline: random graph generation and exact
//! classical solvers, dense statevector simulation of MaxCut and
//! constrained-MIS QAOA circuits, Adam-based multistart parameter
//! optimization, transfer-score dataset construction, Graph2Vec-style
//! unsupervised embeddings, a trainable score predictor (GNN encoders or
//! fixed embeddings plus a residual FCN head), donor retrieval, and
//! transfer/warm-start evaluation with CSV reports.

pub mod dataset;
pub mod embeddings;
pub mod graphs;
pub mod model;
pub mod pipeline;
pub mod qaoa;
pub mod simulator;
pub mod util;

mod error;

pub use error::Error;

/// The two combinatorial optimization problems handled by the pipeline.
///
/// MaxCut instances act as parameter donors, MIS instances as acceptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    MaxCut,
    Mis,
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Problem::MaxCut => write!(f, "maxcut"),
            Problem::Mis => write!(f, "mis"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
