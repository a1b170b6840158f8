use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Axiom violations of partial action data are not errors; they are
/// reported as data through [`crate::paction::AxiomReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monoid must have at least one element")]
    EmptyMonoid,
    #[error(
        "multiplication table is not square: row {row} has {len} entries, expected {expected}"
    )]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("index {index} out of range for a set of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("associativity fails at ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("declared identity fails the identity law at element {a}")]
    BadIdentity { a: usize },
    #[error("transformation closure exceeds the cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("size mismatch: {what} (expected {expected}, found {found})")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("operands act through different monoids")]
    MonoidMismatch,
    #[error("map is not a monomorphism")]
    NotMono,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("domain listing is not strictly increasing")]
    UnsortedSubset,
    #[error("datum is not a partial action")]
    NotPartial,
    #[error("not a global action: {axiom} fails at m={m}, n={n}")]
    NotGlobal {
        axiom: &'static str,
        m: usize,
        n: usize,
    },
    #[error("map does not coequalize p and q")]
    NotCoequalizing,
    #[error("quotient is not compatible with the shift by monoid element {m}")]
    NotEquivariant { m: usize },
    #[error("structure map for monoid element {m} is not continuous")]
    NotContinuous { m: usize },
    #[error("map is not continuous")]
    Discontinuous,
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("enumeration of {count} candidates exceeds the cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("gave up after {attempts} rejected samples")]
    GiveUp { attempts: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
