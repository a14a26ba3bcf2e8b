use thiserror::Error;

use crate::graph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` refers to unknown endpoint id `{vertex}`")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("edge `{edge}` has nonpositive length {length}")]
    NonPositiveLength { edge: String, length: String },
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("subdivision fraction {0} is outside (0, 1)")]
    FractionOutOfRange(String),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("graph is not a valid pm-graph: {0}")]
    InvalidGraph(ValidationReport),
    #[error("invariant requires total genus 3, graph has total genus {0}")]
    UnsupportedGenus(u32),
    #[error("bridge `{edge}` has a side of total genus 0")]
    DegenerateBridge { edge: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` is missing parameter `{param}`")]
    MissingParameter { family: String, param: char },
    #[error("parameter `{param}` must be positive, got {value}")]
    NonPositiveParameter { param: char, value: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("division by zero while evaluating `{0}`")]
    DivisionByZero(String),
    #[error("expression `{0}` is not a polynomial")]
    NotPolynomial(String),
    #[error("bound `{0}` has no witness")]
    MissingWitness(String),
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
