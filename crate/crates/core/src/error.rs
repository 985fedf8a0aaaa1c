use thiserror::Error;

/// Errors produced while building graphs or computing their statistics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    LoopRejected { vertex: usize },

    #[error("adjacency matrix is not symmetric at ({row}, {col})")]
    AsymmetryRejected { row: usize, col: usize },

    #[error("bad matrix entry {token:?} at line {line}: expected 0 or 1")]
    BadEntry { line: usize, token: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    BadVertex { vertex: i64, n: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    SizeExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("{what}: n = {n} is below the minimum of {min}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("graph has no edges, so there is no maximal term")]
    NoTerm,

    #[error("sample count must be at least 1")]
    BadSampleCount,

    #[error("distribution has zero variance")]
    DegenerateVariance,

    #[error("unknown fixture {0:?}")]
    BadFixture(String),

    #[error("chart has n = {chart} but graph has n = {graph}")]
    ChartMismatch { chart: usize, graph: usize },

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit status used by the command-line tool.
    ///
    /// | code | meaning |
    /// |------|---------|
    /// | 1 | i/o failure |
    /// | 2 | input could not be parsed or an argument is invalid |
    /// | 3 | a size cap was exceeded |
    /// | 4 | degenerate input (empty graph, zero variance, empty subset) |
    /// | 5 | unknown fixture |
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 1,
            Error::LoopRejected { .. }
            | Error::AsymmetryRejected { .. }
            | Error::BadEntry { .. }
            | Error::BadVertex { .. }
            | Error::Parse { .. }
            | Error::BadSampleCount
            | Error::ChartMismatch { .. } => 2,
            Error::SizeExceeded { .. } | Error::TooSmall { .. } => 3,
            Error::EmptySubset | Error::NoTerm | Error::DegenerateVariance => 4,
            Error::BadFixture(_) => 5,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn ensure_min(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooSmall { what, n, min })
    } else {
        Ok(())
    }
}
