//! Files, reports and the command-line front end for `drglab-core`.

pub mod cli;
pub mod edgelist;
pub mod family;
pub mod report;
pub mod verify;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] drglab_core::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Bad input from the caller, as opposed to an analysis that could not
    /// finish.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Io { .. } | Error::Usage(_) | Error::Core(drglab_core::Error::Input(_)))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
