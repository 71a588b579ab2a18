use thiserror::Error;

/// Errors raised by invalid input to the algebraic routines.
///
/// Internal-consistency failures (an inexact hook division, a negative
/// multiplicity where a genuine module is expected) are not represented here:
/// they indicate a bug rather than bad input and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("parts {0:?} are not weakly decreasing non-negative integers")]
    NotPartition(Vec<i64>),

    #[error("partition {partition} has size {size}, which is not less than p = {p}")]
    NotPSmall {
        partition: String,
        size: usize,
        p: u32,
    },

    #[error("partition {partition} is not ({p},{l})-small")]
    NotPlSmall { partition: String, p: u32, l: usize },

    #[error("{what} = {value} is outside {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("cannot remove {0}: not an element of the multiset")]
    MissingElement(i64),

    #[error("{0} is not in the real subring; x - conj(x) = {1}")]
    NotReal(String, String),

    #[error("operands live over different primes ({0} and {1})")]
    PrimeMismatch(u32, u32),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, range: String) -> Error {
    Error::OutOfRange {
        what,
        value: value.try_into().unwrap_or(i64::MAX),
        range,
    }
}
