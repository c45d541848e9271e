use thiserror::Error;

use crate::ham_cycle::ConditionReport;
use crate::ham_path::HypothesisReport;

/// Errors produced by graph construction and the certificate pipelines.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A precondition of an operation was violated by the caller.
    #[error("invalid input: {0}")]
    Input(String),

    /// A size cap was exceeded (iterated 3-arc graphs grow geometrically).
    #[error("size cap exceeded: {size} vertices > cap {cap}")]
    SizeCap { size: usize, cap: usize },

    /// The Hamilton-cycle conditions do not hold for the input graph.
    #[error("hamiltonicity conditions failed:\n{0}")]
    Conditions(ConditionReport),

    /// The Hamilton-connectedness hypotheses do not hold for the input graph.
    #[error("hamilton-connectedness hypotheses failed:\n{0}")]
    Hypotheses(HypothesisReport),

    /// A constructed certificate failed internal validation, or a case
    /// analysis reached a pattern the construction does not cover. Either
    /// way the pipeline state is dumped for diagnosis.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
