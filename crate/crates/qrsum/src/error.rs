//! Crate-wide error type.

use num_bigint::BigUint;
use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Characteristic is not a prime number.
    NotPrime(u64),
    /// Characteristic 2 is rejected: the quadratic map is a bijection there
    /// and the residue subgroup is all of F_q*.
    EvenCharacteristic,
    /// Supplied modulus polynomial factors over F_p.
    ReducibleModulus(Vec<u64>),
    /// Field description is malformed (degree 0, wrong modulus length, not monic, ...).
    InvalidFieldSpec(String),
    /// Inversion of the zero element.
    DivisionByZero,
    /// Element enumeration would exceed the configured cap.
    CapExceeded { needed: BigUint, cap: u64 },
    /// An oracle enumeration would exceed its state budget.
    BudgetExceeded { needed: BigUint, budget: u64 },
    /// Operands of a quadratic-ring operation carry different discriminants.
    TagMismatch,
    /// A closed-form evaluation did not certify as an integer; carries the
    /// offending ring value in text form. Always signals an implementation
    /// bug, never a user error.
    NonIntegerResult(String),
    /// A diagonal-equation coefficient is zero.
    ZeroCoefficient,
    /// Subset/tuple size outside the valid range for the field.
    KOutOfRange { k: u64, max: BigUint },
    /// An even-degree fast path was invoked on an odd-degree extension.
    OddExtensionDegree,
    /// Element text could not be parsed for the field at hand.
    ParseElement(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::EvenCharacteristic => write!(f, "characteristic 2 is not supported"),
            Error::ReducibleModulus(m) => {
                write!(f, "modulus polynomial {m:?} is reducible over F_p")
            }
            Error::InvalidFieldSpec(msg) => write!(f, "invalid field description: {msg}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration needs {needed} elements, cap is {cap}")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} states, budget is {budget}")
            }
            Error::TagMismatch => write!(f, "quadratic-ring discriminants differ"),
            Error::NonIntegerResult(v) => {
                write!(f, "closed form did not certify as an integer: {v}")
            }
            Error::ZeroCoefficient => write!(f, "diagonal coefficients must be nonzero"),
            Error::KOutOfRange { k, max } => write!(f, "k = {k} outside valid range 0..={max}"),
            Error::OddExtensionDegree => {
                write!(f, "fast path requires an even extension degree")
            }
            Error::ParseElement(msg) => write!(f, "cannot parse element: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
