use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be prime (got {0})")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),
    #[error("ring needs at least one variable")]
    NoVariables,
    #[error("invalid or duplicate variable name `{0}`")]
    BadVariable(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("subalgebra is not closed under multiplication")]
    ClosureViolation,
    #[error("subalgebra contains a nonzero nilpotent element")]
    Nilpotent,
    #[error("multiplication map is not diagonalizable over the prime field")]
    NotSplit,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("cannot factor a constant polynomial")]
    ConstantPolynomial,
    #[error("component of a univariate ideal is not principal")]
    NonPrincipalComponent,
    #[error("enumeration of {size} elements exceeds the bound {bound}")]
    BoundExceeded { size: u128, bound: u128 },
    #[error("point list is empty")]
    EmptyPointList,
    #[error("duplicate point in point list")]
    DuplicatePoint,
    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointDimension { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
