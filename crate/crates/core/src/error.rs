use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("modulus tuple must be non-empty")]
    EmptyModuli,
    #[error("modulus {0} is smaller than 2")]
    ModulusTooSmall(u64),
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: u64, lo: u64, hi: u64 },
    #[error("{0} is divisible by a modulus")]
    DivisibleByModulus(u64),
    #[error("partition {0:?} is not regular for the given moduli")]
    NotRegular(Vec<usize>),
    #[error("partition {0:?} is not class regular for the given moduli")]
    NotClassRegular(Vec<usize>),
    #[error("cannot invert zero")]
    DivisionByZero,
    #[error("mixed cyclotomic orders {0} and {1}")]
    MixedOrders(u32, u32),
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("pole at partition {0:?}: a part is divisible by the root order")]
    Pole(Vec<usize>),
    #[error("matrix is singular")]
    Singular,
    #[error("coefficient {0} is not a nonnegative integer")]
    NotIntegral(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
