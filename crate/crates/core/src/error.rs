use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the arithmetic layers and the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// Two operands disagree on the number of variables (or a vector on the
    /// number of generators).
    Dimension {
        expected: usize,
        found: usize,
    },
    NotDivisible,
    ExponentOverflow,
    EmptyPolynomial,
    NotPrime(u64),
    /// A generator index outside `0..m`.
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    /// A critical pair or witness refers to a serial the basis does not hold.
    UnknownSerial(usize),
    Precondition(&'static str),
    InvalidConfig(&'static str),
    /// The engine popped more pairs than the configured cap allows.
    CapExceeded(u64),
    /// The caller's stop condition fired after this many pair selections.
    Interrupted(u64),
    /// An exhaustive search exceeded its work budget.
    ScaleGuard(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Dimension { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotDivisible => write!(f, "monomial is not divisible by the given divisor"),
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::EmptyPolynomial => write!(f, "operation requires a nonzero polynomial"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "generator index {index} out of range (m = {len})")
            }
            Error::UnknownSerial(s) => write!(f, "no basis element with serial {s}"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::InvalidConfig(what) => write!(f, "invalid configuration: {what}"),
            Error::CapExceeded(cap) => write!(f, "iteration cap of {cap} pair selections exceeded"),
            Error::Interrupted(pops) => {
                write!(f, "stopped by the caller after {pops} pair selections")
            }
            Error::ScaleGuard(what) => write!(f, "search budget exceeded: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
