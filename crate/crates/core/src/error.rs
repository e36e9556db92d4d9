//! Error type shared across the engine.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Syntax error in a problem, graph or formula file.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A configurable resource cap was exceeded (closure arity, candidate
    /// types, enumeration budget, ...).
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A function is not expressible over the requested base.
    #[error("not expressible: {0}")]
    NotExpressible(String),

    /// An operation was applied outside the fragment it is defined for.
    #[error("fragment violation: {0}")]
    Fragment(String),

    /// A named algorithm does not accept the instance's fragment.
    #[error("routing conflict: {0}")]
    Routing(String),

    /// A clone identifier outside the supported inventory was requested.
    #[error("unsupported clone: {0}")]
    UnsupportedClone(String),

    /// A cross-check between two deciders disagreed. Always a bug.
    #[error("crosscheck disagreement: {0}")]
    Crosscheck(String),
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }
}
