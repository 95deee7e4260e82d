use alloc::string::String;

/// Failure kinds shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed arguments: out-of-range vertex, loop edge, zero word in a
    /// connection set, infeasible parameters.
    #[error("invalid input: {0}")]
    Input(String),
    /// The graph lacks a structural property the operation requires
    /// (connected, regular, diameter two, transitive group).
    #[error("structural precondition failed: {0}")]
    Structure(String),
    /// A desk-scale size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// An iterative numeric method did not converge.
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// A map claimed to be an automorphism broke adjacency, or a verified
    /// identity did not hold.
    #[error("integrity check failed: {0}")]
    Integrity(String),
}

pub type Result<T> = core::result::Result<T, Error>;
