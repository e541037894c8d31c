//! Dense univariate polynomials over GF(p).

use std::fmt;

use super::{Degree, PolyError};
use crate::field::{FieldCtx, FieldElement};

/// Coefficients in ascending power order; the trailing coefficient is kept
/// nonzero, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    ctx: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(ctx: FieldCtx, mut coeffs: Vec<FieldElement>) -> Self {
        for c in &coeffs {
            assert_eq!(c.ctx(), ctx, "coefficient from a different field");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { ctx, coeffs }
    }

    /// Builds from integer coefficients `c0, c1, ...` (reduced mod p).
    pub fn from_values(ctx: FieldCtx, values: &[u64]) -> Self {
        Self::new(ctx, values.iter().map(|&v| ctx.element(v)).collect())
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        UniPoly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::MinusInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| self.ctx.zero())
    }

    /// Coefficients as plain integers, `c0` first.
    pub fn values(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let mut acc = self.ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: FieldElement) -> Self {
        Self::new(self.ctx, self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Quotient and remainder with `deg r < deg rhs`.
    pub fn divmod(&self, rhs: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        assert_eq!(self.ctx, rhs.ctx, "mixed field contexts");
        if rhs.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = rhs.coeffs.len() - 1;
        let lead_inv = rhs.coeffs[dd].inv().expect("leading coefficient nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem[rem.len() - 1] * lead_inv;
            quot[k] = factor;
            for i in 0..=dd {
                let t = rem[k + i] - factor * rhs.coeffs[i];
                rem[k + i] = t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(self.ctx, quot), UniPoly::new(self.ctx, rem)))
    }
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.ctx, rhs.ctx, "mixed field contexts");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(self.ctx, coeffs)
    }
}

impl std::ops::Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.ctx, rhs.ctx, "mixed field contexts");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(self.ctx, coeffs)
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.ctx, rhs.ctx, "mixed field contexts");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        UniPoly::new(self.ctx, coeffs)
    }
}

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.ctx, self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    /// Ascending powers, e.g. `3+2*x` or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (_, 1) => {}
                (_, v) => write!(f, "{v}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
