use thiserror::Error;

/// Errors raised by the combinatorial, homological and search engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("vertex {vertex} is outside 1..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },
    #[error("edge {contained:?} is contained in edge {container:?}")]
    NotAntichain {
        contained: Vec<usize>,
        container: Vec<usize>,
    },
    #[error("link at vertex {0} is degenerate: {{{0}}} is an edge, so the link ideal is the unit ideal")]
    DegenerateLink(usize),
    #[error("{count} edges exceeds the cap of {cap}")]
    TooManyEdges { count: usize, cap: usize },
    #[error("{count} vertices exceeds the cap of {cap}")]
    TooManyVertices { count: usize, cap: usize },
    #[error("face enumeration exceeded the cap of {cap} faces")]
    TooManyFaces { cap: usize },
    #[error("{colors} colors cannot properly color a hypergraph of degree {degree}")]
    ColorCountTooSmall { colors: usize, degree: usize },
    #[error("not a simple graph: hypergraph must be pure of degree 2")]
    NotAGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("hypergraph is not pure")]
    NotPure,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("hypergraph is not a hypertree")]
    NotAHypertree,
    #[error("hypergraph is not a hyperforest")]
    NotAHyperforest,
    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),
    #[error("witness construction failed: {0}")]
    WitnessCheckFailed(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("a partition needs at least one part")]
    ZeroParts,
    #[error("instance too large for brute force: {0}")]
    TooLarge(String),
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("field characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: generator repeats variable {variable}, not squarefree")]
    NotSquarefree { line: usize, variable: String },
}

impl Error {
    /// True for failures caused by engine caps or search budgets rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::TooManyEdges { .. }
                | Error::TooManyVertices { .. }
                | Error::TooManyFaces { .. }
                | Error::BudgetExceeded { .. }
                | Error::TooLarge(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
