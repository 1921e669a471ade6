use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid (p,q) = ({p}, {q}): {reason}")]
    InvalidParams {
        p: String,
        q: String,
        reason: &'static str,
    },

    /// The bound formulas divide by `[2]-1` and `[3]-1` (or their effective
    /// counterparts); both must be strictly positive.
    #[error("degenerate (p,q)-numbers at (p,q) = ({p}, {q}): requires [2] > 1 and [3] > 1 (p + q > 1), got [2] = {n2}, [3] = {n3}")]
    Degenerate {
        p: String,
        q: String,
        n2: String,
        n3: String,
    },

    #[error("degenerate Bernardi-effective numbers at c = {c}, (p,q) = ({p}, {q}): requires [2]L2 > 1 and [3]L3 > 1, got [2]L2 = {n2}, [3]L3 = {n3}")]
    DegenerateEffective {
        c: u32,
        p: String,
        q: String,
        n2: String,
        n3: String,
    },

    #[error("target hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("mu = {mu} is outside the {window} window")]
    Window { mu: String, window: String },

    #[error("infeasible coefficient jet: {0}")]
    Infeasible(String),

    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
