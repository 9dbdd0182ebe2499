use thiserror::Error;

/// Errors raised by graph construction, index evaluation and the bound machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("eccentricity is zero on the single-vertex graph")]
    ZeroEccentricity,

    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// A parameter combination outside the feasible domain, with the violated constraint.
    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    /// A transformation was applied outside its hypotheses.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no connected bipartite graph on {n} vertices has {k} cut edges")]
    EmptyClass { n: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
