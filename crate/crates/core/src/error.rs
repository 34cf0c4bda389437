use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torsion order {0} is invalid: every torsion order must be at least 2")]
    BadTorsionOrder(i64),

    #[error("element has {got} coordinates, the group expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("grading is not effective: {missing} is not reached by the variable degrees")]
    NotEffective { missing: String },

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("conical ideal entry `{0}` is not a relevant monomial")]
    BadConicalIdeal(String),

    #[error("`{0}` is not relevant")]
    NotRelevant(String),

    #[error("prime {prime} contains a variable of {f}")]
    PrimeMeetsF { prime: String, f: String },

    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },

    #[error("invalid argument `{token}`: {message}")]
    BadArgument { token: String, message: String },

    #[error("integer overflow while converting an exact intermediate result")]
    Overflow,

    #[error("search for {what} exhausted its bound of {bound}")]
    SearchExhausted { what: &'static str, bound: u32 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
