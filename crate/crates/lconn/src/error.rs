use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A construction would exceed the 64-vertex limit.
    #[error("graph order {0} exceeds the 64-vertex limit")]
    TooManyVertices(usize),

    /// A graph order outside the supported range (orders start at 1).
    #[error("graph order must be at least 1")]
    EmptyOrder,

    /// Malformed graph6/sparse6/digraph6 input.
    #[error("codec error: {0}")]
    Codec(String),

    /// A vertex index outside `0..n`.
    #[error("vertex index {index} out of range for order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    /// An operation asked for the removal of every vertex.
    #[error("cannot remove all vertices")]
    RemovedAll,

    /// An invariant is undefined on the given input (e.g. toughness of a
    /// complete graph).
    #[error("undefined: {0}")]
    Undefined(String),

    /// A parameter tuple violates a feasibility inequality; the message
    /// names the violated constraint.
    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    /// An iterative solver hit its iteration cap.
    #[error("solver failed to converge: {0}")]
    NoConvergence(String),

    /// Input digraph is not strongly connected where strength is required.
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    /// Root finding found no sign change inside the search bracket.
    #[error("no sign change found in bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Enumeration request beyond the enforced scale caps.
    #[error("scale cap exceeded: {0}")]
    ScaleCap(String),

    /// A lemma instance violates the lemma's hypotheses.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
