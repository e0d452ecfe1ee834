use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("elements belong to different carriers ({left} vs {right})")]
    MixedCarrier { left: String, right: String },

    #[error("{op} requires a {expected} carrier")]
    WrongBackend {
        op: &'static str,
        expected: &'static str,
    },

    #[error("carrier with {atoms} atoms exceeds the enumeration bound {bound}")]
    BoundExceeded { atoms: usize, bound: usize },

    #[error("invalid atom graph: {0}")]
    InvalidGraph(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: axiom {} failed", report.axiom)]
    AxiomFailure { what: String, report: AxiomReport },

    #[error("map is not continuous")]
    NotContinuous,

    #[error("map is not a Boolean homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("embedding is not dense")]
    NotDense,

    #[error("map is not a homeomorphic embedding")]
    NotEmbedding,

    #[error("no cluster matches the transported trace")]
    NoMatchingCluster,

    #[error("empty list of relations")]
    EmptyRelationList,

    #[error("morphism endpoints do not match: {0}")]
    EndpointMismatch(String),

    #[error("unknown registry entry `{0}`")]
    UnknownName(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}
