use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("degree {0} is not supported here")]
    Degree(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation")]
    NotAPermutation,
    #[error("super summit set exceeds cap {cap} (visited {visited})")]
    SummitCapExceeded { cap: usize, visited: usize },
    #[error("classification inconclusive: {0}")]
    Inconclusive(String),
    #[error("invalid index set: {0}")]
    IndexSet(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("orbit exceeds cap {cap}")]
    OrbitCapExceeded { cap: usize },
    #[error("not a normal form: {0}")]
    NotNormal(String),
}
