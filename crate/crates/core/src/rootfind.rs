//! Extraction of the roots of a polynomial in its last variable: all f with
//! `(y - f) | P`, equivalently all f with `P(x, f(x)) = 0` identically.
//!
//! Full irreducible factorization is never needed; only linear-in-y factors
//! are, and divisibility by `y - f` is exactly the vanishing of the
//! substituted polynomial.

use thiserror::Error;

use crate::field::FieldElement;
use crate::interp::monomials_up_to;
use crate::poly::{Degree, MultiPoly, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootFindError {
    #[error("root extraction requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("{candidates} candidates exceed the enumeration budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
}

/// Whether `(y - f)` divides `p`, where `y` is `p`'s last variable and `f`
/// is a polynomial in the remaining ones with total degree at most `d`.
pub fn is_y_root(p: &MultiPoly, f: &MultiPoly, d: usize) -> Result<bool, RootFindError> {
    assert!(p.arity() >= 2, "need a designated last variable");
    assert_eq!(
        f.arity(),
        p.arity() - 1,
        "candidate must omit the last variable"
    );
    assert!(
        f.total_degree() <= Degree::Finite(d),
        "candidate degree exceeds the bound {d}"
    );
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    Ok(p.substitute_last(&f.embed(p.arity())).is_zero())
}

/// All univariate f with `deg f <= d` and `(y - f) | p`, for bivariate `p`,
/// in lexicographic order of the coefficient vector `(c0, ..., cd)`.
///
/// Coefficients are recovered low-order first: candidate constant terms are
/// the roots of `p(0, y)` after dividing out the largest power of x, and
/// each choice `r` rewrites the problem as one on `p(x, r + x*y)` with one
/// fewer coefficient to determine.
pub fn univariate_y_roots(p: &MultiPoly, d: usize) -> Result<Vec<UniPoly>, RootFindError> {
    assert_eq!(p.arity(), 2, "expected a bivariate polynomial");
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let ctx = p.ctx();
    let (q, _) = p.strip_common_power(0);
    let mut coeff_vectors: Vec<Vec<FieldElement>> = Vec::new();
    descend(&q, 0, d, &mut Vec::new(), &mut coeff_vectors);
    coeff_vectors.sort_by_key(|cs| cs.iter().map(|c| c.value()).collect::<Vec<_>>());
    let mut out = Vec::new();
    for coeffs in coeff_vectors {
        let f = UniPoly::new(ctx, coeffs);
        // Each reported root is re-verified against the original input.
        if is_y_root(p, &MultiPoly::from_uni(&f), d)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// One recursion level: `q` has no common x factor, so `q(0, y)` is a
/// nonzero polynomial whose roots are the only viable next coefficients.
fn descend(
    q: &MultiPoly,
    level: usize,
    d: usize,
    prefix: &mut Vec<FieldElement>,
    out: &mut Vec<Vec<FieldElement>>,
) {
    let ctx = q.ctx();
    for r in ctx.elements() {
        if !q.eval(&[ctx.zero(), r]).is_zero() {
            continue;
        }
        if level == d {
            // Last coefficient: the whole tail is the constant r, so demand
            // q(x, r) = 0 identically, not just at x = 0.
            if q.substitute_last(&MultiPoly::constant(ctx, 2, r)).is_zero() {
                let mut coeffs = prefix.clone();
                coeffs.push(r);
                out.push(coeffs);
            }
        } else {
            let shift = MultiPoly::from_terms(ctx, 2, [(vec![0, 0], r), (vec![1, 1], ctx.one())]);
            let (next, _) = q.substitute_last(&shift).strip_common_power(0);
            // The substitution y -> r + x*y is injective on polynomials, so
            // `next` is nonzero and the recursion stays well-founded.
            prefix.push(r);
            descend(&next, level + 1, d, prefix, out);
            prefix.pop();
        }
    }
}

/// Brute-force oracle for [`univariate_y_roots`]: tests every candidate
/// coefficient vector in `F^(d+1)`. Same output contract, guarded by a
/// budget on the `p^(d+1)` enumeration.
pub fn univariate_y_roots_exhaustive(
    p: &MultiPoly,
    d: usize,
    budget: u64,
) -> Result<Vec<UniPoly>, RootFindError> {
    assert_eq!(p.arity(), 2, "expected a bivariate polynomial");
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let ctx = p.ctx();
    let pv = ctx.modulus() as u64;
    let candidates = (pv as u128).checked_pow(d as u32 + 1).unwrap_or(u128::MAX);
    if candidates > budget as u128 {
        return Err(RootFindError::BudgetExceeded { candidates, budget });
    }
    let total = candidates as u64;

    // c0 is the most significant digit, so index order is lexicographic
    // order on the coefficient vector.
    let check = |i: u64| -> Option<UniPoly> {
        let mut coeffs = vec![ctx.zero(); d + 1];
        let mut rest = i;
        for c in coeffs.iter_mut().rev() {
            *c = ctx.element(rest % pv);
            rest /= pv;
        }
        let f = UniPoly::new(ctx, coeffs);
        let hit = is_y_root(p, &MultiPoly::from_uni(&f), d).expect("p is nonzero");
        hit.then_some(f)
    };

    #[cfg(feature = "parallel")]
    let out = {
        use rayon::prelude::*;
        (0..total).into_par_iter().filter_map(check).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let out = (0..total).filter_map(check).collect();
    Ok(out)
}

/// All k-variate f of total degree at most `d` with `(y - f) | p`, where
/// `p` has arity `k + 1`. Enumeration-based with a budget on the
/// `p^C(d+k, k)` candidate count; output in lexicographic order of the
/// coefficient vector over the graded monomial list.
pub fn multivariate_y_roots(
    p: &MultiPoly,
    d: usize,
    k: usize,
    budget: u64,
) -> Result<Vec<MultiPoly>, RootFindError> {
    assert!(k >= 1, "need at least one free variable");
    assert_eq!(p.arity(), k + 1, "arity must be k + 1");
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let ctx = p.ctx();
    let pv = ctx.modulus() as u64;
    let monos = monomials_up_to(k, d);
    let candidates = (pv as u128)
        .checked_pow(monos.len() as u32)
        .unwrap_or(u128::MAX);
    if candidates > budget as u128 {
        return Err(RootFindError::BudgetExceeded { candidates, budget });
    }
    let total = candidates as u64;

    // Digits map to coefficients with the first monomial most significant,
    // so index order is lexicographic on the coefficient vector.
    let check = |i: u64| -> Option<MultiPoly> {
        let mut rest = i;
        let mut terms = Vec::with_capacity(monos.len());
        for mono in monos.iter().rev() {
            terms.push((mono.clone(), ctx.element(rest % pv)));
            rest /= pv;
        }
        let f = MultiPoly::from_terms(ctx, k, terms);
        p.substitute_last(&f.embed(k + 1)).is_zero().then_some(f)
    };

    #[cfg(feature = "parallel")]
    let out = {
        use rayon::prelude::*;
        (0..total).into_par_iter().filter_map(check).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let out = (0..total).filter_map(check).collect();
    Ok(out)
}
