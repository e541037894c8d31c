//! Sparse multivariate polynomials over GF(p).
//!
//! Terms live in a `BTreeMap` keyed by exponent tuples, so iteration order,
//! equality, and the printed form are all deterministic. No zero coefficient
//! is ever stored; the zero polynomial has an empty term map.

use std::collections::BTreeMap;
use std::fmt;

use super::Degree;
use crate::field::{FieldCtx, FieldElement};
use crate::poly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: FieldCtx,
    arity: usize,
    terms: BTreeMap<Vec<u32>, FieldElement>,
}

impl MultiPoly {
    pub fn zero(ctx: FieldCtx, arity: usize) -> Self {
        MultiPoly {
            ctx,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: FieldCtx, arity: usize, c: FieldElement) -> Self {
        Self::monomial(ctx, arity, &vec![0; arity], c)
    }

    /// The variable with 0-based index `i` (printed as `x{i+1}`).
    pub fn var(ctx: FieldCtx, arity: usize, i: usize) -> Self {
        assert!(
            i < arity,
            "variable index {i} out of range for arity {arity}"
        );
        let mut exps = vec![0u32; arity];
        exps[i] = 1;
        Self::monomial(ctx, arity, &exps, ctx.one())
    }

    pub fn monomial(ctx: FieldCtx, arity: usize, exps: &[u32], c: FieldElement) -> Self {
        Self::from_terms(ctx, arity, [(exps.to_vec(), c)])
    }

    /// Sums duplicate exponent tuples and drops zero coefficients.
    pub fn from_terms(
        ctx: FieldCtx,
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, FieldElement)>,
    ) -> Self {
        let mut map: BTreeMap<Vec<u32>, FieldElement> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), arity, "exponent tuple length != arity");
            assert_eq!(c.ctx(), ctx, "coefficient from a different field");
            let entry = map.entry(exps).or_insert_with(|| ctx.zero());
            *entry = *entry + c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly {
            ctx,
            arity,
            terms: map,
        }
    }

    pub fn from_uni(u: &UniPoly) -> Self {
        Self::from_terms(
            u.ctx(),
            1,
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| (vec![i as u32], c)),
        )
    }

    /// Inverse of [`from_uni`]; the polynomial must have arity 1.
    pub fn to_uni(&self) -> UniPoly {
        assert_eq!(self.arity, 1, "to_uni requires arity 1");
        let deg = self.terms.keys().map(|e| e[0] as usize).max();
        let mut coeffs = vec![self.ctx.zero(); deg.map_or(0, |d| d + 1)];
        for (exps, &c) in &self.terms {
            coeffs[exps[0] as usize] = c;
        }
        UniPoly::new(self.ctx, coeffs)
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order of exponent tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], FieldElement)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> Degree {
        self.weighted_degree(&vec![1; self.arity])
    }

    /// Max over terms of the weight-weighted exponent sum.
    pub fn weighted_degree(&self, weights: &[usize]) -> Degree {
        assert_eq!(weights.len(), self.arity, "one weight per variable");
        self.terms
            .keys()
            .map(|exps| {
                exps.iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as usize * w)
                    .sum()
            })
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.arity, "point arity mismatch");
        let mut acc = self.ctx.zero();
        for (exps, &c) in &self.terms {
            let mut t = c;
            for (&e, &x) in exps.iter().zip(point) {
                if e > 0 {
                    t = t * x.pow(e as u64);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn scale(&self, s: FieldElement) -> Self {
        Self::from_terms(
            self.ctx,
            self.arity,
            self.terms.iter().map(|(e, &c)| (e.clone(), c * s)),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.ctx, self.arity, self.ctx.one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-expresses the polynomial over a wider variable list; the new
    /// trailing variables are unused.
    pub fn embed(&self, arity: usize) -> Self {
        assert!(arity >= self.arity, "embed cannot shrink arity");
        Self::from_terms(
            self.ctx,
            arity,
            self.terms.iter().map(|(e, &c)| {
                let mut exps = e.clone();
                exps.resize(arity, 0);
                (exps, c)
            }),
        )
    }

    /// Replaces the last variable by `f` (same arity). Writing `self` as
    /// `sum_j A_j * y^j` in the last variable `y`, returns `sum_j A_j * f^j`.
    pub fn substitute_last(&self, f: &MultiPoly) -> Self {
        assert!(
            self.arity >= 1,
            "substitute_last requires at least one variable"
        );
        assert_eq!(f.arity, self.arity, "substitute arity mismatch");
        assert_eq!(f.ctx, self.ctx, "mixed field contexts");
        let y = self.arity - 1;
        // Bucket terms by their power of the last variable.
        let mut buckets: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (exps, &c) in &self.terms {
            let j = exps[y];
            let mut base = exps.clone();
            base[y] = 0;
            let bucket = buckets
                .entry(j)
                .or_insert_with(|| Self::zero(self.ctx, self.arity));
            *bucket = &*bucket + &Self::monomial(self.ctx, self.arity, &base, c);
        }
        let mut acc = Self::zero(self.ctx, self.arity);
        let mut fpow = Self::constant(self.ctx, self.arity, self.ctx.one());
        let mut cur = 0u32;
        for (j, a) in buckets {
            for _ in cur..j {
                fpow = &fpow * f;
            }
            cur = j;
            acc = &acc + &(&a * &fpow);
        }
        acc
    }

    /// Divides out the largest power of variable `var`, returning the
    /// quotient and that power. The zero polynomial returns `(0, 0)`.
    pub fn strip_common_power(&self, var: usize) -> (Self, u32) {
        assert!(var < self.arity, "variable index out of range");
        let Some(s) = self.terms.keys().map(|e| e[var]).min() else {
            return (self.clone(), 0);
        };
        if s == 0 {
            return (self.clone(), 0);
        }
        let stripped = Self::from_terms(
            self.ctx,
            self.arity,
            self.terms.iter().map(|(e, &c)| {
                let mut exps = e.clone();
                exps[var] -= s;
                (exps, c)
            }),
        );
        (stripped, s)
    }
}

fn same_shape(a: &MultiPoly, b: &MultiPoly) -> (FieldCtx, usize) {
    assert_eq!(a.ctx, b.ctx, "mixed field contexts");
    assert_eq!(
        a.arity, b.arity,
        "arity mismatch: {} vs {}",
        a.arity, b.arity
    );
    (a.ctx, a.arity)
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (ctx, arity) = same_shape(self, rhs);
        MultiPoly::from_terms(
            ctx,
            arity,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, &c)| (e.clone(), c)),
        )
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &-rhs
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::from_terms(
            self.ctx,
            self.arity,
            self.terms.iter().map(|(e, &c)| (e.clone(), -c)),
        )
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (ctx, arity) = same_shape(self, rhs);
        let mut map: BTreeMap<Vec<u32>, FieldElement> = BTreeMap::new();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                let entry = map.entry(exps).or_insert_with(|| ctx.zero());
                *entry = *entry + ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly {
            ctx,
            arity,
            terms: map,
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Terms sorted by total degree, then descending lex on exponents, each
    /// printed as `c*x1^e1*...`; unit coefficients and first powers are
    /// abbreviated. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u32>, &FieldElement)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: u64 = ea.iter().map(|&e| e as u64).sum();
            let db: u64 = eb.iter().map(|&e| e as u64).sum();
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        for (idx, (exps, c)) in terms.into_iter().enumerate() {
            if idx > 0 {
                write!(f, "+")?;
            }
            let is_const = exps.iter().all(|&e| e == 0);
            let mut wrote = false;
            if c.value() != 1 || is_const {
                write!(f, "{c}")?;
                wrote = true;
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                write!(f, "x{}", i + 1)?;
                if e >= 2 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    fn mp(ctx: FieldCtx, arity: usize, terms: &[(&[u32], u64)]) -> MultiPoly {
        MultiPoly::from_terms(
            ctx,
            arity,
            terms.iter().map(|&(e, v)| (e.to_vec(), ctx.element(v))),
        )
    }

    #[test]
    fn construction_normalizes() {
        let f5 = gf(5);
        // Duplicate tuples merge; a cancelling pair vanishes.
        let p = mp(f5, 2, &[(&[1, 0], 2), (&[1, 0], 3), (&[0, 1], 4)]);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p, mp(f5, 2, &[(&[0, 1], 4)]));
        assert!(mp(f5, 2, &[(&[2, 2], 5)]).is_zero());
        assert!(MultiPoly::zero(f5, 3).is_zero());
    }

    #[test]
    fn display_frozen_forms() {
        let f5 = gf(5);
        let g = mp(f5, 2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 2)]);
        assert_eq!(g.to_string(), "1+x1+2*x2");
        let f7 = gf(7);
        let q = mp(f7, 2, &[(&[1, 0], 6), (&[0, 1], 1)]);
        assert_eq!(q.to_string(), "6*x1+x2");
        assert_eq!(MultiPoly::zero(f7, 2).to_string(), "0");
        assert_eq!(MultiPoly::constant(f7, 2, f7.one()).to_string(), "1");
        assert_eq!(mp(f7, 3, &[(&[0, 1, 0], 1)]).to_string(), "x2");
        assert_eq!(mp(f7, 2, &[(&[2, 3], 4)]).to_string(), "4*x1^2*x2^3");
        // Degree ties order descending-lex: x1*x2 before x2^2, after x1^2.
        let t = mp(f7, 2, &[(&[0, 2], 1), (&[2, 0], 3), (&[1, 1], 1)]);
        assert_eq!(t.to_string(), "3*x1^2+x1*x2+x2^2");
    }

    #[test]
    fn degrees() {
        let f7 = gf(7);
        // x1^3 + x2^2 with weights (1,2): max(3, 4) = 4.
        let p = mp(f7, 2, &[(&[3, 0], 1), (&[0, 2], 1)]);
        assert_eq!(p.weighted_degree(&[1, 2]), Degree::Finite(4));
        assert_eq!(p.total_degree(), Degree::Finite(3));
        assert_eq!(
            MultiPoly::zero(f7, 2).weighted_degree(&[1, 5]),
            Degree::MinusInfinity
        );
        assert_eq!(
            MultiPoly::constant(f7, 2, f7.one()).total_degree(),
            Degree::Finite(0)
        );
    }

    #[test]
    fn eval_examples() {
        let f7 = gf(7);
        let p = mp(f7, 2, &[(&[1, 0], 6), (&[0, 1], 1)]); // 6*x1 + x2
        assert_eq!(p.eval(&[f7.element(3), f7.element(4)]), f7.element(1));
        assert_eq!(p.eval(&[f7.element(2), f7.element(2)]), f7.zero());
        let c = MultiPoly::constant(f7, 3, f7.element(5));
        assert_eq!(c.eval(&[f7.zero(), f7.zero(), f7.zero()]), f7.element(5));
    }

    #[test]
    fn mul_example() {
        let f5 = gf(5);
        // (x2 - x1)(x2 - 2*x1) = x2^2 + 2*x1*x2 + 2*x1^2 over GF(5).
        let a = mp(f5, 2, &[(&[0, 1], 1), (&[1, 0], 4)]);
        let b = mp(f5, 2, &[(&[0, 1], 1), (&[1, 0], 3)]);
        let prod = &a * &b;
        assert_eq!(prod, mp(f5, 2, &[(&[0, 2], 1), (&[1, 1], 2), (&[2, 0], 2)]));
    }

    #[test]
    fn pow_example() {
        let f2 = gf(2);
        let one_plus_x = mp(f2, 1, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(one_plus_x.pow(2), mp(f2, 1, &[(&[0], 1), (&[2], 1)]));
        assert_eq!(one_plus_x.pow(0), MultiPoly::constant(f2, 1, f2.one()));
    }

    #[test]
    fn substitute_last_examples() {
        let f7 = gf(7);
        // P = x2^2 - x1^2, substitute x2 := x1 gives 0.
        let p = mp(f7, 2, &[(&[0, 2], 1), (&[2, 0], 6)]);
        assert!(p.substitute_last(&MultiPoly::var(f7, 2, 0)).is_zero());
        // P = x2 - x1^2, substitute x2 := x1*x2 gives x1*x2 - x1^2.
        let q = mp(f7, 2, &[(&[0, 1], 1), (&[2, 0], 6)]);
        let sub = q.substitute_last(&mp(f7, 2, &[(&[1, 1], 1)]));
        assert_eq!(sub, mp(f7, 2, &[(&[1, 1], 1), (&[2, 0], 6)]));
        // Substituting a constant slices the polynomial.
        let r = q.substitute_last(&MultiPoly::constant(f7, 2, f7.element(3)));
        assert_eq!(r, mp(f7, 2, &[(&[0, 0], 3), (&[2, 0], 6)]));
    }

    #[test]
    fn strip_common_power_examples() {
        let f7 = gf(7);
        // x1^2*x2 + x1^3 = x1^2 * (x2 + x1).
        let p = mp(f7, 2, &[(&[2, 1], 1), (&[3, 0], 1)]);
        let (q, s) = p.strip_common_power(0);
        assert_eq!(s, 2);
        assert_eq!(q, mp(f7, 2, &[(&[0, 1], 1), (&[1, 0], 1)]));
        let (q2, s2) = q.strip_common_power(0);
        assert_eq!(s2, 0);
        assert_eq!(q2, q);
        assert_eq!(MultiPoly::zero(f7, 2).strip_common_power(1).1, 0);
    }

    #[test]
    fn uni_round_trip() {
        let f7 = gf(7);
        let u = UniPoly::from_values(f7, &[3, 0, 2]);
        let m = MultiPoly::from_uni(&u);
        assert_eq!(m, mp(f7, 1, &[(&[0], 3), (&[2], 2)]));
        assert_eq!(m.to_uni(), u);
        assert!(MultiPoly::from_uni(&UniPoly::zero(f7)).is_zero());
        assert!(MultiPoly::zero(f7, 1).to_uni().is_zero());
    }

    #[test]
    fn embed_pads_exponents() {
        let f7 = gf(7);
        let p = mp(f7, 1, &[(&[2], 3)]);
        assert_eq!(p.embed(3), mp(f7, 3, &[(&[2, 0, 0], 3)]));
    }

    #[test]
    #[should_panic(expected = "arity mismatch")]
    fn arity_mismatch_rejected() {
        let f7 = gf(7);
        let _ = &MultiPoly::zero(f7, 2) + &MultiPoly::zero(f7, 3);
    }

    fn arb_mp(p: u32, arity: usize) -> impl Strategy<Value = MultiPoly> {
        let ctx = gf(p);
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, arity), 0u64..p as u64),
            0..6,
        )
        .prop_map(move |terms| {
            MultiPoly::from_terms(
                ctx,
                arity,
                terms.into_iter().map(|(e, v)| (e, ctx.element(v))),
            )
        })
    }

    proptest! {
        // Substitution then evaluation equals evaluation with the composed
        // last coordinate.
        #[test]
        fn substitute_commutes_with_eval(
            p in arb_mp(7, 2),
            f in arb_mp(7, 2),
            a in 0u64..7,
            b in 0u64..7,
        ) {
            let ctx = gf(7);
            let (a, b) = (ctx.element(a), ctx.element(b));
            let lhs = p.substitute_last(&f).eval(&[a, b]);
            let rhs = p.eval(&[a, f.eval(&[a, b])]);
            prop_assert_eq!(lhs, rhs);
        }

        // Ring identities.
        #[test]
        fn ring_identities(
            a in arb_mp(5, 2),
            b in arb_mp(5, 2),
            c in arb_mp(5, 2),
        ) {
            prop_assert_eq!(&(&a + &b), &(&b + &a));
            prop_assert_eq!(&(&a * &b), &(&b * &a));
            prop_assert_eq!(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
            prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
            prop_assert!((&a - &a).is_zero());
        }

        // Multiplication is degree-additive on nonzero inputs.
        #[test]
        fn mul_adds_total_degree(a in arb_mp(5, 2), b in arb_mp(5, 2)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (da, db) = (a.total_degree().finite().unwrap(), b.total_degree().finite().unwrap());
            prop_assert_eq!((&a * &b).total_degree(), Degree::Finite(da + db));
        }
    }
}
