use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not subdiagonal: entry {index} is {value} but at most {max} is allowed")]
    NotSubdiagonal { index: usize, value: usize, max: usize },

    /// A request exceeded one of the configured enumeration bounds.
    #[error("{what} {requested} exceeds the configured bound {bound}")]
    Limit {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("coefficient {index} is outside a series of precision {precision}")]
    OutOfPrecision { index: usize, precision: usize },

    #[error("{0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no fixture for {0}")]
    MissingFixture(String),

    #[error("network error: {0}")]
    Network(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
