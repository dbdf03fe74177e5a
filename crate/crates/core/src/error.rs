use alloc::string::String;
use core::fmt;

use crate::bidegree::Bidegree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnknownRing(String),
    UnknownMap(String),
    UnknownCheck(String),
    UnknownGenerator { ring: String, name: String },
    /// The ring has a generator of non-positive degree, so enumeration cannot terminate.
    Unbounded { ring: String, generator: String },
    NotHomogeneous { ring: String },
    /// A bidegree was requested that the ring cannot carry (e.g. `q != 0` on a
    /// single-graded ring, or `p < 0`).
    BadDegree { ring: String, deg: Bidegree },
    /// An element landed outside the ring model. Always a model bug.
    Inconsistent(String),
    /// Exhaustive search refused because the piece is too large.
    CapExceeded { dim: usize, cap: usize },
    /// The input to the family classifier is the zero element.
    ZeroElement,
    InvalidCatalog(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownRing(r) => write!(f, "unknown ring `{r}`"),
            Error::UnknownMap(m) => write!(f, "unknown map `{m}`"),
            Error::UnknownCheck(c) => write!(f, "unknown check `{c}`"),
            Error::UnknownGenerator { ring, name } => {
                write!(f, "ring `{ring}` has no generator `{name}`")
            }
            Error::Unbounded { ring, generator } => write!(
                f,
                "ring `{ring}`: generator `{generator}` has non-positive degree, enumeration is unbounded"
            ),
            Error::NotHomogeneous { ring } => write!(f, "inhomogeneous element in ring `{ring}`"),
            Error::BadDegree { ring, deg } => write!(f, "ring `{ring}` has no piece at {deg}"),
            Error::Inconsistent(msg) => write!(f, "internal consistency error: {msg}"),
            Error::CapExceeded { dim, cap } => {
                write!(f, "piece dimension {dim} exceeds the exhaustion cap {cap}")
            }
            Error::ZeroElement => write!(f, "element is zero"),
            Error::InvalidCatalog(msg) => write!(f, "invalid catalog: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
