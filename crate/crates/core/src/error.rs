//! Shared error type for all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplicative order of zero is undefined")]
    ZeroElement,
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("index {index} out of range, {count} available")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("elements belong to different parent algebras")]
    MixedParents,
    #[error("bicharacter entry {0} has a free (non-torsion) part")]
    NotTorsion(String),
    #[error("the radical contains no odd-degree vector")]
    NoCentralOddElement,
    #[error("action on an inverted generator is not determined by generator images")]
    UndefinedOnInverse,
    #[error("free generator `{0}` has no concrete value")]
    UninstantiatedFreeGenerator(String),
    #[error("point ({0}) does not lie on the curve")]
    PointNotOnCurve(String),
    #[error("degenerate Hesse parameters: {0}")]
    DegenerateCurve(String),
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exceeds desk scale: {0}")]
    DeskScale(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
