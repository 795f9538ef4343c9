use thiserror::Error;

/// Errors raised by the algebra, series and quiver layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point")]
    Pole,
    #[error("cannot evaluate at q: odd power of q^(1/2) in {0}")]
    OddPower(String),
    #[error("grading mismatch between series operands")]
    GradingMismatch,
    #[error("twist matrix missing or mismatched")]
    TwistMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Exp requires augmentation-ideal input (nonzero constant term)")]
    ExpConstantTerm,
    #[error("Log requires constant term 1")]
    LogConstantTerm,
    #[error("Adams operation / Moebius function requires n >= 1")]
    ZeroIndex,
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("DT invariants require a symmetric quiver (the antisymmetric form must vanish)")]
    NotSymmetric,
    #[error("stratum with slope {slope} has <{alpha}, {beta}> = {value} != 0")]
    StratumNotCommutative {
        slope: String,
        alpha: String,
        beta: String,
        value: i64,
    },
    #[error("coefficient at {at} is not a Laurent polynomial: {value}")]
    NotLaurent { at: String, value: String },
    #[error("coefficient at {at} is not an integer polynomial in q: {value}")]
    NotPolynomialInQ { at: String, value: String },
    #[error("matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("refined series has {levels} levels but bound {bound} needs at least {bound}")]
    LevelShortfall { levels: usize, bound: u32 },
    #[error("enumeration needs cap {required}, configured cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
