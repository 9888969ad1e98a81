use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("image of `{var}` must be homogeneous of degree {expected}")]
    DegreeMismatch { var: String, expected: u32 },

    #[error("coefficient of {monomial} is not divisible by {divisor}")]
    NotDivisible { monomial: String, divisor: String },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },

    #[error("Sq^1 equation has no solution in degree {degree}")]
    NoSolution { degree: u32 },

    #[error("matrix is singular")]
    Singular,

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }

    /// True for errors caused by the caller's input, as opposed to a broken
    /// internal identity.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NoSolution { .. } | Error::Invariant(_) | Error::NotDivisible { .. }
        )
    }
}
