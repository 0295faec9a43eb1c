use thiserror::Error;

use crate::graph::Vertex;
use crate::trace::SolverTrace;

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error("vertices {0} and {1} are not adjacent")]
    NotSemicomplete(Vertex, Vertex),
    #[error("digraph is not strong")]
    NotStrong,
    #[error("need at least {need} vertices, got {got}")]
    TooFewVertices { need: usize, got: usize },
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("underlying graph is not 2-connected")]
    NotTwoConnected,
    #[error("vertices {0:?} are pairwise non-adjacent")]
    IndependentTriple([Vertex; 3]),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{n} vertices exceed the exact-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("internal assertion: {message}")]
    Internal { message: String, trace: SolverTrace },
}

impl SolveError {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        SolveError::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        SolveError::Internal {
            message: msg.into(),
            trace: SolverTrace::default(),
        }
    }

    /// Attaches `trace` to an internal failure; other variants pass through.
    pub(crate) fn with_trace(self, trace: &SolverTrace) -> Self {
        match self {
            SolveError::Internal { message, trace: inner } => {
                let mut merged = trace.clone();
                merged.extend(inner);
                SolveError::Internal {
                    message,
                    trace: merged,
                }
            }
            other => other,
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, SolveError::Internal { .. })
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            SolveError::NotSemicomplete(..) => "not-semicomplete",
            SolveError::NotStrong => "not-strong",
            SolveError::TooFewVertices { .. } => "too-few-vertices",
            SolveError::Disconnected => "disconnected",
            SolveError::NotTwoConnected => "not-2-connected",
            SolveError::IndependentTriple(_) => "alpha-at-least-3",
            SolveError::Precondition(_) => "precondition",
            SolveError::TooLarge { .. } => "too-large",
            SolveError::Internal { .. } => "internal-assertion",
        }
    }
}

/// Fails with an internal error carrying `msg` when `cond` is false.
macro_rules! ensure_internal {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err($crate::error::SolveError::internal(format!($($msg)+)));
        }
    };
}
pub(crate) use ensure_internal;
