//! Top-level reconstruction: recover every low-degree polynomial agreeing
//! with noisy evaluations at or above a threshold.
//!
//! Univariate path: pick (m, l) so the monomial count exceeds the point
//! count, interpolate a vanishing polynomial of (1, d)-weighted degree at
//! most m + l*d, and read the candidates off its y-roots. Agreement `t`
//! strictly above m + l*d forces every sufficiently-agreeing polynomial to
//! appear, so the returned list is complete. The grid path does the same
//! over k-dimensional point grids, where the divisibility step needs
//! t > (m + l*d) * h^(k-1).

use thiserror::Error;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FieldCtx, FieldElement};
use crate::interp::{count_monomials, find_vanishing_poly};
use crate::poly::{MultiPoly, UniPoly};
use crate::rootfind::{multivariate_y_roots, univariate_y_roots, RootFindError};

/// Default cap on brute-force candidate enumerations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error(
        "threshold {t} is below the minimum admissible {t_min} for n = {n}, d = {d}; \
         completeness is only guaranteed for t >= {t_min}"
    )]
    ThresholdTooSmall {
        t: usize,
        t_min: usize,
        n: usize,
        d: usize,
    },
    #[error("infeasible grid parameters: {0}")]
    Infeasible(String),
    #[error("sample set must be nonempty")]
    EmptySampleSet,
    #[error("grid axis is empty")]
    EmptyAxis,
    #[error("grid axis contains duplicate elements")]
    DuplicateAxis,
    #[error("table has {got} entries but the grid has {expected}")]
    TableSizeMismatch { got: usize, expected: u128 },
    #[error(transparent)]
    RootFind(#[from] RootFindError),
}

/// Interpolation parameters for an n-point, degree-d instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecoderParams {
    pub n: usize,
    pub d: usize,
    /// Agreement threshold; `choose_parameters` sets the minimum admissible.
    pub t: usize,
    pub m: usize,
    pub l: usize,
}

impl DecoderParams {
    /// The (1, d)-weighted degree cap m + l*d of the vanishing polynomial.
    pub fn weighted_degree_cap(&self) -> usize {
        self.m + self.l * self.d
    }

    /// Number of interpolation monomials; exceeds n by construction.
    pub fn basis_size(&self) -> u64 {
        count_monomials(self.m, self.l, self.d, 1)
    }
}

/// The standard parameter choice: l one below the ceiling of
/// sqrt(2(n+1)/d), m starting from max(0, floor(d/2) - 1) and raised just
/// enough that the monomial count reaches n + 1. The resulting minimum
/// threshold t = m + l*d + 1 is about sqrt(2*n*d) for large n.
pub fn choose_parameters(n: usize, d: usize) -> DecoderParams {
    assert!(n >= 1, "need at least one point");
    assert!(d >= 1, "degree bound must be positive");
    // Smallest s with s^2 * d >= 2(n+1), i.e. s = ceil(sqrt(2(n+1)/d)).
    let mut s: usize = 1;
    while s * s * d < 2 * (n + 1) {
        s += 1;
    }
    let l = s - 1;
    let mut m = (d / 2).saturating_sub(1);
    while count_monomials(m, l, d, 1) < (n as u64) + 1 {
        m += 1;
    }
    DecoderParams {
        n,
        d,
        t: m + l * d + 1,
        m,
        l,
    }
}

/// Candidates surviving the agreement filter, with the parameters used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutput {
    /// (polynomial, agreement) pairs in lexicographic coefficient order.
    pub candidates: Vec<(UniPoly, usize)>,
    pub params: DecoderParams,
}

/// Every f with deg f <= d agreeing with at least `t` of the points.
///
/// Complete whenever `t` is at least the minimum from `choose_parameters`;
/// smaller thresholds are rejected because the divisibility guarantee
/// breaks and the output could silently miss valid candidates.
pub fn list_decode(
    ctx: FieldCtx,
    points: &[(FieldElement, FieldElement)],
    d: usize,
    t: usize,
) -> Result<DecodeOutput, DecodeError> {
    assert!(!points.is_empty(), "need at least one point");
    let n = points.len();
    let mut params = choose_parameters(n, d);
    if t < params.t {
        return Err(DecodeError::ThresholdTooSmall {
            t,
            t_min: params.t,
            n,
            d,
        });
    }
    params.t = t;

    let pts: Vec<Vec<FieldElement>> = points
        .iter()
        .map(|&(x, y)| {
            assert_eq!(x.ctx(), ctx, "point from a different field");
            assert_eq!(y.ctx(), ctx, "point from a different field");
            vec![x, y]
        })
        .collect();
    let vanishing = find_vanishing_poly(ctx, &pts, params.m, params.l, d, 1)
        .expect("monomial count exceeds point count, so a kernel vector exists");

    let mut candidates = Vec::new();
    for f in univariate_y_roots(&vanishing, d)? {
        // Agreement is recomputed against the raw input, never inferred.
        let agreement = points.iter().filter(|&&(x, y)| f.eval(x) == y).count();
        if agreement >= t {
            candidates.push((f, agreement));
        }
    }
    Ok(DecodeOutput { candidates, params })
}

/// A k-dimensional reconstruction problem: values of an unknown function on
/// the grid H^k, a total-degree bound d, and an agreement threshold t.
#[derive(Debug, Clone)]
pub struct GridInstance {
    ctx: FieldCtx,
    axis: Vec<FieldElement>,
    k: usize,
    /// Row-major over H^k: the last coordinate varies fastest.
    table: Vec<FieldElement>,
    d: usize,
    t: usize,
}

impl GridInstance {
    pub fn new(
        ctx: FieldCtx,
        axis: Vec<FieldElement>,
        k: usize,
        table: Vec<FieldElement>,
        d: usize,
        t: usize,
    ) -> Result<Self, DecodeError> {
        assert!(k >= 1, "grid dimension must be positive");
        if axis.is_empty() {
            return Err(DecodeError::EmptyAxis);
        }
        for x in &axis {
            assert_eq!(x.ctx(), ctx, "axis element from a different field");
        }
        for v in &table {
            assert_eq!(v.ctx(), ctx, "table value from a different field");
        }
        let mut seen: Vec<u32> = axis.iter().map(|x| x.value()).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != axis.len() {
            return Err(DecodeError::DuplicateAxis);
        }
        let expected = (axis.len() as u128).pow(k as u32);
        if table.len() as u128 != expected {
            return Err(DecodeError::TableSizeMismatch {
                got: table.len(),
                expected,
            });
        }
        Ok(GridInstance {
            ctx,
            axis,
            k,
            table,
            d,
            t,
        })
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn axis(&self) -> &[FieldElement] {
        &self.axis
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn table(&self) -> &[FieldElement] {
        &self.table
    }

    pub fn grid_size(&self) -> usize {
        self.table.len()
    }

    /// Coordinates of the grid point at a row-major index.
    pub fn grid_point(&self, mut idx: usize) -> Vec<FieldElement> {
        let h = self.axis.len();
        let mut coords = vec![self.ctx.zero(); self.k];
        for c in coords.iter_mut().rev() {
            *c = self.axis[idx % h];
            idx /= h;
        }
        coords
    }

    /// How many grid points `f` matches.
    pub fn agreement(&self, f: &MultiPoly) -> usize {
        (0..self.table.len())
            .filter(|&i| f.eval(&self.grid_point(i)) == self.table[i])
            .count()
    }
}

fn pow_sat(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).unwrap_or(u64::MAX)
}

/// Feasible (m, l) at exactly weighted degree `w`, if any: the search
/// prefers larger l and respects the m, l <= t bounds.
fn params_at_weight(inst: &GridInstance, w: usize, grid: u64) -> Option<(usize, usize)> {
    let l_cap = match w.checked_div(inst.d) {
        None => inst.t,
        Some(q) => q.min(inst.t),
    };
    for l in (0..=l_cap).rev() {
        let m = w - l * inst.d;
        if m > inst.t {
            continue;
        }
        if count_monomials(m, l, inst.d, inst.k) > grid {
            return Some((m, l));
        }
    }
    None
}

/// The (m, l) minimizing m + l*d such that the monomial count exceeds h^k
/// while t > (m + l*d) * h^(k-1), or `None` when no such pair exists with
/// m, l <= t. Ties at equal weighted degree resolve toward larger l.
pub fn grid_feasibility(inst: &GridInstance) -> Option<(usize, usize)> {
    let h = inst.axis.len() as u64;
    let grid = pow_sat(h, inst.k as u32);
    let scale = pow_sat(h, inst.k as u32 - 1);
    let mut w = 0usize;
    while (w as u64).saturating_mul(scale) < inst.t as u64 {
        if let Some(found) = params_at_weight(inst, w, grid) {
            return Some(found);
        }
        w += 1;
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDecodeOutput {
    /// (polynomial, agreement) pairs in lexicographic coefficient order.
    pub candidates: Vec<(MultiPoly, usize)>,
    pub m: usize,
    pub l: usize,
}

/// Every k-variate f of total degree <= d agreeing with the table on at
/// least t grid points. `budget` caps the candidate enumeration of the
/// root-extraction step.
pub fn grid_reconstruct(inst: &GridInstance, budget: u64) -> Result<GridDecodeOutput, DecodeError> {
    let h = inst.axis.len() as u64;
    let grid = pow_sat(h, inst.k as u32);
    let scale = pow_sat(h, inst.k as u32 - 1);
    let Some((m, l)) = grid_feasibility(inst) else {
        // Name the inequality that failed: the smallest weighted degree
        // with enough monomials, within the same m, l <= t search bounds.
        let max_w = inst.t + inst.t * inst.d;
        let msg = match (0..=max_w).find(|&w| params_at_weight(inst, w, grid).is_some()) {
            Some(w_star) => format!(
                "completeness requires t > (m + l*d) * h^(k-1) = {} * {} = {}, but t = {}",
                w_star,
                scale,
                (w_star as u64).saturating_mul(scale),
                inst.t
            ),
            None => format!(
                "no m, l <= t = {} give more than h^k = {} monomials",
                inst.t, grid
            ),
        };
        return Err(DecodeError::Infeasible(msg));
    };

    let pts: Vec<Vec<FieldElement>> = (0..inst.table.len())
        .map(|i| {
            let mut pt = inst.grid_point(i);
            pt.push(inst.table[i]);
            pt
        })
        .collect();
    let vanishing = find_vanishing_poly(inst.ctx, &pts, m, l, inst.d, inst.k)
        .expect("monomial count exceeds grid size, so a kernel vector exists");

    let mut candidates = Vec::new();
    for f in multivariate_y_roots(&vanishing, inst.d, inst.k, budget)? {
        let agreement = inst.agreement(&f);
        if agreement >= inst.t {
            candidates.push((f, agreement));
        }
    }
    Ok(GridDecodeOutput { candidates, m, l })
}

/// Randomized identity test: evaluates `p` at `trials` points drawn
/// uniformly from `sample`^arity and reports whether every evaluation was
/// zero. `false` is always correct; `true` errs with probability at most
/// (total_degree / |sample|)^trials for nonzero p with distinct sample
/// elements.
pub fn schwartz_zippel_test(
    p: &MultiPoly,
    sample: &[FieldElement],
    trials: usize,
    seed: u64,
) -> Result<bool, DecodeError> {
    assert!(trials >= 1, "need at least one trial");
    if sample.is_empty() {
        return Err(DecodeError::EmptySampleSet);
    }
    for x in sample {
        assert_eq!(x.ctx(), p.ctx(), "sample element from a different field");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let point: Vec<FieldElement> = (0..p.arity())
            .map(|_| sample[rng.gen_range(0..sample.len())])
            .collect();
        if !p.eval(&point).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
