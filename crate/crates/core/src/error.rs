use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// More vertices than a single adjacency word can hold.
    #[error("graph order {order} exceeds the capacity of {max} vertices")]
    Capacity { order: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The graph has a component that is not a path.
    #[error("not a linear forest: component {component:?} is not a path")]
    NotLinearForest { component: Vec<usize> },

    #[error("order {order} is outside the supported enumeration range (max {max})")]
    UnsupportedOrder { order: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("brute-force size guard: {0}")]
    SizeGuard(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
