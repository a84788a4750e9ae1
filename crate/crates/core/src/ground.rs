//! Ground sequences: the strictly increasing inputs every sieve starts from.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A strictly increasing sequence of positive integers, evaluated lazily.
///
/// `Explicit` lists are finite prefixes; asking for a term past the end is a
/// [`Error::BoundedPrefix`] rather than a panic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundSequence {
    Naturals,
    /// `a·k + b` for `k >= 1`.
    Arith {
        a: u64,
        b: u64,
    },
    Squares,
    Explicit(Arc<[u64]>),
}

impl GroundSequence {
    pub fn arith(a: u64, b: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidGround(
                "arithmetic step must be positive".into(),
            ));
        }
        Ok(GroundSequence::Arith { a, b })
    }

    pub fn explicit(terms: impl Into<Vec<u64>>) -> Result<Self> {
        let terms: Vec<u64> = terms.into();
        if terms.is_empty() {
            return Err(Error::InvalidGround("explicit ground is empty".into()));
        }
        if terms[0] == 0 {
            return Err(Error::InvalidGround("terms must be positive".into()));
        }
        if let Some(i) = terms.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGround(format!(
                "terms must be strictly increasing (positions {} and {})",
                i + 1,
                i + 2
            )));
        }
        Ok(GroundSequence::Explicit(terms.into()))
    }

    /// The `k`-th term (1-based).
    pub fn term(&self, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(Error::Precondition("ground terms are 1-based".into()));
        }
        match self {
            GroundSequence::Naturals => Ok(k),
            GroundSequence::Arith { a, b } => a
                .checked_mul(k)
                .and_then(|v| v.checked_add(*b))
                .ok_or(Error::Overflow("arithmetic ground term")),
            GroundSequence::Squares => k
                .checked_mul(k)
                .ok_or(Error::Overflow("square ground term")),
            GroundSequence::Explicit(terms) => usize::try_from(k - 1)
                .ok()
                .and_then(|i| terms.get(i).copied())
                .ok_or(Error::BoundedPrefix {
                    len: terms.len(),
                    requested: k,
                }),
        }
    }

    /// `(a, b)` when the ground is an arithmetic progression (naturals are `(1, 0)`).
    pub fn progression(&self) -> Option<(u64, u64)> {
        match self {
            GroundSequence::Naturals => Some((1, 0)),
            GroundSequence::Arith { a, b } => Some((*a, *b)),
            _ => None,
        }
    }

    /// Number of available terms, `None` for the infinite grounds.
    pub fn len(&self) -> Option<usize> {
        match self {
            GroundSequence::Explicit(terms) => Some(terms.len()),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for GroundSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundSequence::Naturals => write!(f, "naturals"),
            GroundSequence::Arith { a, b } => write!(f, "arith({a},{b})"),
            GroundSequence::Squares => write!(f, "squares"),
            GroundSequence::Explicit(terms) => write!(f, "explicit[{}]", terms.len()),
        }
    }
}
