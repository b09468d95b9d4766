use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("too many variables: at most {max} are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("divisor is not monic in {0}")]
    NotMonic(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("transvectant order {k} exceeds min({p}, {q})")]
    TransvectantOrder { k: usize, p: usize, q: usize },
    #[error("expected a form of order {expected}, got order {got}")]
    WrongOrder { expected: usize, got: usize },
    #[error("discriminant needs order >= 2, got {0}")]
    OrderTooSmall(usize),
    #[error("d*p - r = {0} is negative or odd")]
    WeightParity(i64),
    #[error("degree {0} is not divisible by {1}")]
    DegreeNotDivisible(u64, u64),
    #[error("singular group element")]
    SingularMatrix,
    #[error("degenerate quartic")]
    DegenerateQuartic,
    #[error("zero form")]
    ZeroForm,
    #[error("unstable form (vanishing discriminant)")]
    UnstableForm,
    #[error("repeated roots; j-data undefined")]
    RepeatedRoots,
    #[error("not in the J,K,L subring: nonzero residual")]
    NotInSubring,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
