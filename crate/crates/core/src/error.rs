use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not bar-antisymmetric: {0}")]
    BarAntisymmetry(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("empty interval: {0}")]
    EmptyInterval(String),
    #[error("sequence pattern error: {0}")]
    SequencePattern(String),
    #[error("generator out of range: {0}")]
    GeneratorRange(String),
    #[error("boundary generator: {0}")]
    BoundaryGenerator(String),
    #[error("not in the wedge space: {0}")]
    NotInWedgeSpace(String),
    #[error("not dominant: {0}")]
    Dominance(String),
    #[error("not in the span of the chosen two-factor basis: {0}")]
    NotInUSpan(String),
    #[error("stabilization cap reached: {0}")]
    StabilizationCap(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("unknown {kind} `{name}` (available: {available})")]
    Unknown {
        kind: &'static str,
        name: String,
        available: String,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
}
