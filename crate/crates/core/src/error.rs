use thiserror::Error;

/// Errors raised across the crate.
///
/// Several variants (`NotSplit`, `FieldCharTooSmall`, `NotGradedSimple`) are
/// legitimate outcomes of an analysis rather than bugs; callers such as the
/// CLI map them onto dedicated exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field element does not belong to this field")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(usize),
    #[error("field of order {p}^{k} does not fit the 63-bit element encoding")]
    FieldTooLarge { p: u64, k: usize },
    #[error("no element of multiplicative order {m} in a field of order {order}")]
    NoSuchRoot { m: u64, order: u64 },

    #[error("group table is malformed: {0}")]
    BadTable(String),
    #[error("group table has no two-sided identity at the declared index")]
    BadIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("group product is not associative on ({0}, {1}, {2})")]
    GroupNotAssociative(usize, usize, usize),

    #[error("cocycle identity fails on ({0}, {1}, {2})")]
    CocycleViolation(usize, usize, usize),
    #[error("cocycle value at ({0}, {1}) is zero")]
    ZeroValue(usize, usize),
    #[error("value is not an {m}-th root of unity")]
    ValueOutsideMu { m: u64 },
    #[error("group of order {0} exceeds the supported size for cohomology")]
    GroupTooLarge(usize),

    #[error("structure constant ({0}, {1}, {2}) violates the grading")]
    GradingViolation(usize, usize, usize),
    #[error("algebra product is not associative on basis triple ({0}, {1}, {2})")]
    AlgebraNotAssociative(usize, usize, usize),
    #[error("declared unit is not a homogeneous two-sided identity")]
    BadUnit,
    #[error("change-of-basis block for degree {0} is singular")]
    SingularBlock(usize),
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("supports do not commute: {0} and {1}")]
    NonCommutingSupports(usize, usize),
    #[error("algebra has no unit")]
    NoUnit,

    #[error("characteristic {p} must exceed the dimension {dim}")]
    FieldCharTooSmall { p: u64, dim: usize },
    #[error("field does not split the algebra: irreducible factor of degree {degree}; try an extension of degree {suggested_extension}")]
    NotSplit { degree: usize, suggested_extension: usize },
    #[error("algebra is not graded simple")]
    NotGradedSimple,
    #[error("algebra has a radical of dimension {0}")]
    NotSemisimple(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
