use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid diagram: {0}")]
    Validation(String),
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("front is not in plat position")]
    NotPlat,
    #[error("no usable insertion base point: {0}")]
    NoInsertionPoint(String),
    #[error("front carries no satellite markup")]
    MissingMarkup,
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("a-degree {0} is positive; the a^-1 = 0 specialization is undefined")]
    PositiveADegree(i32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("unsupported field order {0}; expected 2, 4, 8 or 16")]
    BadFieldOrder(u64),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("disk search exceeded its budget of {0} partial disks")]
    DiskSearchOverflow(usize),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("expression is not a-free")]
    NotAFree,
}

impl Error {
    /// True for the errors the CLI reports as budget overflow.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit(_) | Error::DiskSearchOverflow(_) | Error::BudgetExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
