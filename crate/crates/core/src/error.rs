use thiserror::Error;

/// Errors produced while building or querying Renner monoids.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type {label}{rank}")]
    InvalidType { label: String, rank: usize },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid partial injection: {0}")]
    InvalidPartialInjection(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    SizeCapExceeded { what: &'static str, cap: usize },

    #[error("unit permutations generate {got} elements, expected |W| = {expected}")]
    Faithfulness { got: usize, expected: usize },

    #[error("operation is undefined on the zero element")]
    ZeroElement,

    #[error("face is not in the W-orbit of the base face")]
    NotInOrbit,

    #[error("element does not belong to the monoid")]
    NotInMonoid,

    #[error("integer overflow while counting")]
    Overflow,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
