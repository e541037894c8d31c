//! Weighted-degree interpolation: find a nonzero polynomial of bounded
//! weighted degree vanishing at every data point.
//!
//! The monomials of weight at most `m + l*d` under weights `(1, ..., 1, d)`
//! index the columns of a constraint matrix with one row per point; any
//! nullspace vector is a vanishing polynomial. Existence is purely a matter
//! of counting: more columns than rows forces a nontrivial nullspace.

use crate::field::{FieldCtx, FieldElement};
use crate::poly::MultiPoly;

/// Number of monomials `x1^e1 * ... * xk^ek * y^j` with `j <= l` and
/// `e1 + ... + ek <= m + (l - j) * d`: the column count of the constraint
/// matrix. Saturates at `u64::MAX` (only relevant for absurd parameters).
pub fn count_monomials(m: usize, l: usize, d: usize, k: usize) -> u64 {
    assert!(k >= 1, "need at least one interpolation variable");
    let mut total: u128 = 0;
    for j in 0..=l {
        let cap = m + (l - j) * d;
        total = total.saturating_add(binomial((cap + k) as u128, k as u128));
    }
    u64::try_from(total).unwrap_or(u64::MAX)
}

/// C(a, k), saturating.
fn binomial(a: u128, k: u128) -> u128 {
    if k > a {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=k {
        // Exact at every step: acc holds C(a-k+i-1, i-1) * ... running product.
        acc = match acc.checked_mul(a - k + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// All exponent tuples of length `k` with total degree at most `cap`,
/// ordered by total degree, lex ascending within a degree. The constant
/// tuple comes first.
pub fn monomials_up_to(k: usize, cap: usize) -> Vec<Vec<u32>> {
    assert!(k >= 1);
    let mut out = Vec::new();
    for deg in 0..=cap {
        push_tuples_with_sum(k, deg as u32, &mut Vec::new(), &mut out);
    }
    out
}

fn push_tuples_with_sum(k: usize, sum: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k == 1 {
        prefix.push(sum);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=sum {
        prefix.push(first);
        push_tuples_with_sum(k - 1, sum - first, prefix, out);
        prefix.pop();
    }
}

/// The ordered monomial list for parameters `(m, l, d, k)`. Entries are
/// exponent tuples `(e1, ..., ek, j)`; the last variable's power `j` is the
/// slowest index, so the constant monomial sits at position 0.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    arity: usize,
    entries: Vec<Vec<u32>>,
}

impl MonomialBasis {
    pub fn new(m: usize, l: usize, d: usize, k: usize) -> Self {
        let mut entries = Vec::new();
        for j in 0..=l {
            let cap = m + (l - j) * d;
            for mut xs in monomials_up_to(k, cap) {
                xs.push(j as u32);
                entries.push(xs);
            }
        }
        debug_assert_eq!(entries.len() as u64, count_monomials(m, l, d, k));
        MonomialBasis {
            arity: k + 1,
            entries,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone)]
pub struct ConstraintMatrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl ConstraintMatrix {
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Builds from explicit rows (test helper and RREF input).
    pub fn from_rows(ctx: FieldCtx, rows: &[Vec<FieldElement>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend_from_slice(row);
        }
        ConstraintMatrix {
            ctx,
            rows: rows.len(),
            cols,
            data,
        }
    }
}

/// One row per point, one column per basis monomial: entry = the monomial
/// evaluated at the point. Rows are filled in parallel when the `parallel`
/// feature is on; the result is identical either way.
pub fn build_matrix(
    ctx: FieldCtx,
    points: &[Vec<FieldElement>],
    basis: &MonomialBasis,
) -> ConstraintMatrix {
    for pt in points {
        assert_eq!(pt.len(), basis.arity(), "point arity mismatch");
        for x in pt {
            assert_eq!(x.ctx(), ctx, "point from a different field");
        }
    }
    let cols = basis.len();
    let mut data = vec![ctx.zero(); points.len() * cols];

    let fill_row = |(row, pt): (&mut [FieldElement], &Vec<FieldElement>)| {
        for (c, exps) in basis.entries().iter().enumerate() {
            let mut v = ctx.one();
            for (&e, &x) in exps.iter().zip(pt) {
                if e > 0 {
                    v = v * x.pow(e as u64);
                }
            }
            row[c] = v;
        }
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        data.par_chunks_mut(cols)
            .zip(points.par_iter())
            .for_each(fill_row);
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(cols).zip(points.iter()).for_each(fill_row);
    }

    ConstraintMatrix {
        ctx,
        rows: points.len(),
        cols,
        data,
    }
}

/// A nonzero kernel vector of the matrix, or `None` when the columns are
/// independent. Deterministic: after reduction to reduced row echelon form,
/// the first free column is set to 1 and all other free columns to 0.
pub fn nullspace_vector(mat: &ConstraintMatrix) -> Option<Vec<FieldElement>> {
    let ctx = mat.ctx;
    let (rows, cols) = (mat.rows, mat.cols);
    let mut a = mat.data.clone();
    let idx = |r: usize, c: usize| r * cols + c;

    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..cols {
        let rank = pivot_cols.len();
        let Some(pr) = (rank..rows).find(|&r| !a[idx(r, col)].is_zero()) else {
            continue;
        };
        for c in 0..cols {
            a.swap(idx(rank, c), idx(pr, c));
        }
        let inv = a[idx(rank, col)].inv().expect("pivot is nonzero");
        for c in col..cols {
            a[idx(rank, c)] = a[idx(rank, c)] * inv;
        }
        for r in 0..rows {
            if r != rank && !a[idx(r, col)].is_zero() {
                let factor = a[idx(r, col)];
                for c in col..cols {
                    let t = a[idx(r, c)] - factor * a[idx(rank, c)];
                    a[idx(r, c)] = t;
                }
            }
        }
        pivot_cols.push(col);
        if pivot_cols.len() == rows {
            break;
        }
    }

    let first_free = (0..cols).find(|c| pivot_cols.binary_search(c).is_err())?;
    let mut v = vec![ctx.zero(); cols];
    v[first_free] = ctx.one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -a[idx(r, first_free)];
    }
    Some(v)
}

/// A nonzero polynomial of weighted degree at most `m + l*d` (weights
/// `(1, ..., 1, d)`, last variable weighted `d`) vanishing at every point,
/// or `None` when the constraint matrix has full column rank. Guaranteed
/// `Some` whenever `count_monomials(m, l, d, k) > points.len()`.
pub fn find_vanishing_poly(
    ctx: FieldCtx,
    points: &[Vec<FieldElement>],
    m: usize,
    l: usize,
    d: usize,
    k: usize,
) -> Option<MultiPoly> {
    let basis = MonomialBasis::new(m, l, d, k);
    let mat = build_matrix(ctx, points, &basis);
    let v = nullspace_vector(&mat)?;
    Some(MultiPoly::from_terms(
        ctx,
        k + 1,
        basis
            .entries()
            .iter()
            .zip(&v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, &c)| (e.clone(), c)),
    ))
}
