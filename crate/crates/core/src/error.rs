use thiserror::Error;

/// Every failure the library can report.
///
/// The variant name doubles as the machine-readable error code emitted by the
/// command-line front end, see [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    DescriptorMismatch,
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid extension modulus: {0}")]
    InvalidModulus(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("map has no nonzero coefficient")]
    EmptySupport,
    #[error("Macaulay denominator vanished after {attempts} coordinate changes")]
    UnluckySpecialization { attempts: usize },
    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },
    #[error("diagonal stabilizer is infinite")]
    InfiniteDiagonalPart,
    #[error("search space of {size} elements exceeds the limit of {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },
    #[error("prime {p} is not of good reduction: {reason}")]
    BadReductionPrime { p: u64, reason: &'static str },
    #[error("fixed-point form p*y - q*x vanishes identically")]
    DegenerateFixedDivisor,
    #[error("divisor form is zero")]
    ZeroDivisor,
    #[error("divisor vanishes at (1:0) or (0:1)")]
    RootAtZeroOrInfinity,
    #[error("matrix does not preserve the divisor")]
    NotAConfigurationSymmetry,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("component {component} is not homogeneous")]
    InhomogeneousComponent { component: usize },
    #[error("components have different degrees")]
    MixedDegrees,
    #[error("all components are zero")]
    AllZeroComponentVector,
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("integer overflow")]
    Overflow,
}

impl Error {
    /// Stable error code (the variant name).
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::DescriptorMismatch => "DescriptorMismatch",
            Error::InfiniteField => "InfiniteField",
            Error::NotPrime(_) => "NotPrime",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::SingularMatrix => "SingularMatrix",
            Error::EmptySupport => "EmptySupport",
            Error::UnluckySpecialization { .. } => "UnluckySpecialization",
            Error::UnsupportedDimension { .. } => "UnsupportedDimension",
            Error::InfiniteDiagonalPart => "InfiniteDiagonalPart",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::BadReductionPrime { .. } => "BadReductionPrime",
            Error::DegenerateFixedDivisor => "DegenerateFixedDivisor",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::RootAtZeroOrInfinity => "RootAtZeroOrInfinity",
            Error::NotAConfigurationSymmetry => "NotAConfigurationSymmetry",
            Error::BadParameter(_) => "BadParameter",
            Error::Parse { .. } => "ParseError",
            Error::InhomogeneousComponent { .. } => "InhomogeneousComponent",
            Error::MixedDegrees => "MixedDegrees",
            Error::AllZeroComponentVector => "AllZeroComponentVector",
            Error::UnknownVariable { .. } => "UnknownVariable",
            Error::InvalidMap(_) => "InvalidMap",
            Error::Unsupported(_) => "Unsupported",
            Error::Overflow => "Overflow",
        }
    }

    /// Errors raised by resource guards rather than by bad input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::SearchSpaceTooLarge { .. } | Error::UnluckySpecialization { .. } | Error::Overflow
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
