use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("circulant embedding failed: eigenvalue {value:e} at index {index} is below -{tolerance:e}")]
    EmbeddingFailure {
        index: usize,
        value: f64,
        tolerance: f64,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("sample too small: need at least {needed} observations, got {got}")]
    SampleTooSmall { needed: usize, got: usize },

    #[error("degenerate sample: {0}")]
    DegenerateSample(&'static str),

    #[error("Hermite order {0} exceeds the supported maximum of 60")]
    HermiteOrderTooLarge(usize),

    #[error("quadrature produced a non-finite value")]
    NonFiniteQuadrature,

    #[error("Hermite rank not detected up to order {qmax}")]
    RankUndetected { qmax: usize },

    #[error("invalid quadrature grid: {0}")]
    InvalidGrid(String),

    #[error("row {row}: {reason}")]
    Csv { row: usize, reason: String },

    #[error("row {row}: chronology gap, found {year}-{month:02} but expected {expected_year}-{expected_month:02}")]
    ChronologyGap {
        row: usize,
        year: i32,
        month: u32,
        expected_year: i32,
        expected_month: u32,
    },

    #[error("series length {len} is not a whole number of {period}-month cycles")]
    PartialCycle { len: usize, period: usize },

    #[error("empty input")]
    Empty,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
