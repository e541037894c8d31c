//! Exact arithmetic in prime fields GF(p).
//!
//! Every value is kept in canonical form (in `[0, p)`), so equality is plain
//! value equality. Moduli are capped at 2^16 so all intermediate products fit
//! comfortably in 64 bits before reduction.

use std::fmt;

use thiserror::Error;

/// Largest admissible modulus.
pub const MAX_MODULUS: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} out of range (need 2 <= p <= {MAX_MODULUS})")]
    ModulusOutOfRange(u32),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("cannot parse {0:?} as an element of GF({1})")]
    ParseElement(String, u32),
}

/// A validated prime modulus. Copyable and cheap, it travels inside every
/// [`FieldElement`] so mixed-field operations can be caught at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u32,
}

impl FieldCtx {
    /// Validates that `p` is a prime in `[2, 2^16]`.
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if !(2..=MAX_MODULUS).contains(&p) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldCtx { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    /// Builds the canonical element `v mod p`.
    pub fn element(self, v: u64) -> FieldElement {
        FieldElement {
            value: (v % self.p as u64) as u32,
            ctx: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// All field elements in ascending value order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.p as u64).map(move |v| self.element(v))
    }

    /// Parses a decimal integer in `[0, p)`.
    pub fn parse_element(self, s: &str) -> Result<FieldElement, FieldError> {
        match s.trim().parse::<u64>() {
            Ok(v) if v < self.p as u64 => Ok(self.element(v)),
            _ => Err(FieldError::ParseElement(s.to_string(), self.p)),
        }
    }

    /// Smallest multiplicative generator of the nonzero elements: the least
    /// `w` whose order is exactly `p - 1`.
    pub fn find_generator(self) -> FieldElement {
        let group_order = (self.p - 1) as u64;
        let prime_factors = distinct_prime_factors(group_order);
        for w in 1..self.p as u64 {
            let cand = self.element(w);
            let is_generator = prime_factors
                .iter()
                .all(|&q| cand.pow(group_order / q) != self.one());
            if is_generator {
                return cand;
            }
        }
        unreachable!("every prime field has a generator")
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// An element of GF(p), always stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    ctx: FieldCtx,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn ctx(self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Exponentiation by squaring. `a^0 = 1` for every `a`, including zero.
    pub fn pow(self, mut e: u64) -> FieldElement {
        let p = self.ctx.p as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        self.ctx.element(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero(self.ctx.p));
        }
        // Invariant: old_r = old_s * p + (..) * value, gcd ends at 1.
        let (mut old_r, mut r) = (self.value as i64, self.ctx.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        let p = self.ctx.p as i64;
        Ok(self.ctx.element(old_s.rem_euclid(p) as u64))
    }
}

fn same_ctx(a: FieldElement, b: FieldElement) -> FieldCtx {
    assert_eq!(
        a.ctx, b.ctx,
        "mixed field contexts: GF({}) vs GF({})",
        a.ctx.p, b.ctx.p
    );
    a.ctx
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        let ctx = same_ctx(self, rhs);
        ctx.element(self.value as u64 + rhs.value as u64)
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        let ctx = same_ctx(self, rhs);
        ctx.element(self.value as u64 + (ctx.p - rhs.value) as u64)
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        let ctx = same_ctx(self, rhs);
        ctx.element(self.value as u64 * rhs.value as u64)
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.ctx.element((self.ctx.p - self.value) as u64)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
