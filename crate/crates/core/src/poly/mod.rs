//! Polynomials over GF(p): dense univariate and sparse multivariate forms.

mod multi;
mod uni;

pub use multi::MultiPoly;
pub use uni::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial division by zero")]
    DivisionByZero,
}

/// Degree of a polynomial, with the zero polynomial at `MinusInfinity`.
///
/// Variant order makes the derived `Ord` treat `MinusInfinity` as smaller
/// than every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    /// The finite value, or `None` for the zero polynomial.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}
