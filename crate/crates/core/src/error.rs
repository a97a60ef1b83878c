use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring of {size} elements exceeds the element cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("ideal lattice exceeds the cap of {cap} ideals")]
    LatticeCapExceeded { cap: usize },
    #[error("isomorphism search is limited to rings of at most {cap} elements (got {size})")]
    SearchCapExceeded { size: usize, cap: usize },
    #[error("modulus must be at least 2 (got {0})")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ring axiom `{axiom}` fails at elements {elements:?}")]
    AxiomViolation {
        axiom: &'static str,
        elements: Vec<usize>,
    },
    #[error("map is not a unital ring homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("set is not multiplicatively closed: {a} * {b} = {product} is missing")]
    NotMultClosed { a: usize, b: usize, product: usize },
    #[error("multiplicative set must not contain zero")]
    ZeroInS,
    #[error("multiplicative set must contain the identity")]
    OneNotInS,
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("predicate requires a proper ideal")]
    ImproperIdeal,
    #[error("ideal is not weakly 1-absorbing prime")]
    NotW1AP,
    #[error("element {index} out of range for a ring of {size} elements")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("element literal `{literal}` does not denote an element of {ring}")]
    BadLiteral { literal: String, ring: String },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

impl Error {
    /// True for the errors that come from hitting a configured size limit.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::LatticeCapExceeded { .. } | Error::SearchCapExceeded { .. }
        )
    }
}

/// Parse failure with the byte offset where it was detected and the tokens
/// that would have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing")?,
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        match self.found {
            Some(c) => write!(f, ", found `{c}`"),
            None => write!(f, ", found end of input"),
        }
    }
}

impl std::error::Error for SyntaxError {}
