use alloc::string::String;
use core::fmt;

/// Errors shared across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands carry incompatible polynomial bases.
    BasisMismatch,
    /// The operation requires a monomial-basis polynomial.
    NonMonomialBasis,
    /// Division by a zero scalar or zero polynomial.
    ZeroDivisor,
    /// Shift operators with different steps cannot be combined.
    DeltaMismatch,
    /// Mixed shift/differential operands where one kind is required.
    KindMismatch,
    /// A rational literal failed to parse.
    InvalidRational(String),
    /// A parameter violated a precondition (message names it).
    InvalidParameter(&'static str),
    /// `matrix_in_basis`: the image of basis column `column` needs degree
    /// `needed_degree`, beyond the requested truncation.
    ImageEscapesTruncation { column: usize, needed_degree: usize },
    /// Two eigenvalues coincide: `lambda_k = lambda_j` with `k < j`.
    DegenerateSpectrum { k: usize, j: usize },
    /// A division that a theorem guarantees exact left a remainder.
    NonzeroRemainder,
    /// The QES block is not invariant: column `column` escapes degree n.
    InvarianceViolation { column: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BasisMismatch => write!(f, "polynomial basis mismatch"),
            Error::NonMonomialBasis => write!(f, "operation requires monomial basis"),
            Error::ZeroDivisor => write!(f, "division by zero"),
            Error::DeltaMismatch => write!(f, "shift operators have different steps"),
            Error::KindMismatch => write!(f, "operator kind mismatch"),
            Error::InvalidRational(s) => write!(f, "invalid rational literal: {s}"),
            Error::InvalidParameter(m) => write!(f, "invalid parameter: {m}"),
            Error::ImageEscapesTruncation { column, needed_degree } => write!(
                f,
                "image of basis column {column} needs degree {needed_degree}, beyond truncation"
            ),
            Error::DegenerateSpectrum { k, j } => {
                write!(f, "degenerate spectrum: lambda_{k} = lambda_{j}")
            }
            Error::NonzeroRemainder => write!(f, "exact division left a nonzero remainder"),
            Error::InvarianceViolation { column } => {
                write!(f, "invariant subspace violated at column {column}")
            }
        }
    }
}
