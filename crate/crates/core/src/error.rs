use alloc::string::String;
use core::fmt;

/// Errors raised by constructions in this crate.
///
/// Failed axiom checks and invalid derivations are *not* errors; they are
/// reported as values carrying a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    UnknownVariable(String),
    /// The modulus of an extension is not monic or has degree zero.
    InvalidModulus(String),
    /// The modulus has a root in the base field.
    ReducibleModulus(String),
    NotPrime(u64),
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A construction needs a characteristic it was not given.
    WrongCharacteristic {
        required: &'static str,
        found: u64,
    },
    /// Structure constants fail an algebra axiom.
    InvalidAlgebra(String),
    /// A linear map expected to be a ring map is not.
    NotAMorphism(String),
    /// A subspace expected to be an ideal is not closed under multiplication.
    NotAnIdeal(String),
    /// A map does not factor through the quotient it was defined on.
    IllDefined(String),
    /// A requested verification mode cannot decide the requested property.
    ModeIncompatible(String),
    /// A functional or map is not linear over the required ring.
    NotLinear(String),
    /// An enumeration would exceed its documented size bound.
    GuardExceeded {
        what: String,
        size: u128,
        limit: u128,
    },
    RepeatedIndex(usize),
    InconsistentInputs(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::InvalidModulus(m) => write!(f, "invalid modulus: {m}"),
            Error::ReducibleModulus(m) => write!(f, "modulus is reducible: {m}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::WrongCharacteristic { required, found } => {
                write!(f, "requires characteristic {required}, found {found}")
            }
            Error::InvalidAlgebra(m) => write!(f, "invalid algebra: {m}"),
            Error::NotAMorphism(m) => write!(f, "not an algebra morphism: {m}"),
            Error::NotAnIdeal(m) => write!(f, "not an ideal: {m}"),
            Error::IllDefined(m) => write!(f, "map is not well defined: {m}"),
            Error::ModeIncompatible(m) => write!(f, "verification mode not applicable: {m}"),
            Error::NotLinear(m) => write!(f, "not linear: {m}"),
            Error::GuardExceeded { what, size, limit } => {
                write!(f, "{what}: size {size} exceeds guard {limit}")
            }
            Error::RepeatedIndex(i) => write!(f, "index {i} repeated"),
            Error::InconsistentInputs(m) => write!(f, "inconsistent inputs: {m}"),
        }
    }
}
