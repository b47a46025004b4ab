use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{n} vertices exceeds the representable maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("enumeration of labeled graphs on {n} vertices exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("component with {n} vertices exceeds the solver cap of {cap}")]
    SolverCap { n: usize, cap: usize },

    #[error("k must be at least 1")]
    ZeroK,

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("the supplied set is not K_{k}-isolating")]
    NotIsolating { k: usize },

    #[error("the greedy sequence needs a nonempty set")]
    EmptySet,

    #[error("r = {r} is below the graph's star-free threshold {r_min}")]
    StarFreeViolation { r: usize, r_min: usize },

    #[error("{0}")]
    Graph6(#[from] Graph6Error),
}
