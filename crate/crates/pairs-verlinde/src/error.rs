use thiserror::Error;

/// Errors shared across the whole crate.
///
/// Most of these signal a violated precondition rather than a mathematical
/// result: reading past a truncation window, dividing by something that was
/// proved divisible, or getting a non-integer where an Euler characteristic
/// was expected are all bugs in the caller or in this crate, never valid
/// answers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coefficient of exponent {wanted} requested, but series is only known below {order}")]
    OutOfWindow { wanted: i64, order: i64 },
    #[error("cannot invert a series that is zero to working order")]
    NonInvertible,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("expansion order {order} must exceed the shift {shift}")]
    InvalidOrder { order: i64, shift: i64 },
    #[error("exact division failed: nonzero remainder")]
    NotDivisible,
    #[error("parameters must be pairwise distinct")]
    DegenerateParameters,
    #[error("chamber index {i} out of range 0..={w}")]
    InvalidChamber { i: i64, w: i64 },
    #[error("sigma = {0} lies on a wall")]
    OnWall(String),
    #[error("sigma = {0} outside the open interval (0, d/2)")]
    OutOfRange(String),
    #[error("ample cone of M_0 is the projective-space cone; not covered by the flip description")]
    UnsupportedChamber,
    #[error("inputs violate the region condition m(d-2) - 2n > -d + 2g - 2")]
    RegionViolation,
    #[error("expected an integer, got {0}")]
    NonInteger(String),
    #[error("residue defect {defect} still above tolerance after doubling precision twice")]
    PrecisionInsufficient { defect: String },
}

pub type Result<T> = std::result::Result<T, Error>;
