//! Full-length Reed-Solomon codes over GF(p): encoding, channel noise,
//! brute-force maximum-likelihood decoding, list decoding on top of the
//! reconstruction core, and a channel-simulation sweep.
//!
//! Codewords are the evaluation vectors of all polynomials of degree at
//! most d at every field element, giving an [n, d+1, n-d] code with n = p.
//! Unique decoding is possible up to floor((n-d-1)/2) errors; the list
//! decoder keeps recovering the transmitted word well past that radius.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::decoder::{self, choose_parameters, DecodeError};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::{Degree, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("codewords have different lengths ({a} vs {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("message degree {got} exceeds the code's bound {bound}")]
    DegreeTooLarge { got: usize, bound: usize },
    #[error("cannot corrupt {e} positions of a length-{n} codeword")]
    TooManyErrors { e: usize, n: usize },
    #[error("{candidates} candidates exceed the enumeration budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error(
        "tau = {tau} exceeds the list-decoding guarantee; largest admissible tau is {max_tau}"
    )]
    TauTooLarge { tau: usize, max_tau: usize },
    #[error("list decoding unavailable: minimum agreement {t_min} exceeds code length {n}")]
    GuaranteeUnavailable { t_min: usize, n: usize },
    #[error("cannot parse {0:?} as a codeword")]
    ParseCodeword(String),
    #[error(transparent)]
    Decode(#[from] DecodeError),
}

/// Order in which the evaluation points enumerate the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalOrder {
    /// 0, 1, ..., p-1.
    Natural,
    /// 0, w, w^2, ..., w^(p-1) for the smallest generator w.
    Generator,
}

/// JSON-facing summary of a code: `{"p": .., "d": .., "generator": ..}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeDescriptor {
    pub p: u32,
    pub d: usize,
    pub generator: u32,
}

#[derive(Debug, Clone)]
pub struct RSCode {
    ctx: FieldCtx,
    d: usize,
    order: EvalOrder,
    generator: FieldElement,
    eval_points: Vec<FieldElement>,
}

impl RSCode {
    pub fn new(ctx: FieldCtx, d: usize, order: EvalOrder) -> Result<Self, CodecError> {
        let p = ctx.modulus() as usize;
        if d > p - 1 {
            return Err(CodecError::DegreeTooLarge {
                got: d,
                bound: p - 1,
            });
        }
        let generator = ctx.find_generator();
        let eval_points: Vec<FieldElement> = match order {
            EvalOrder::Natural => ctx.elements().collect(),
            EvalOrder::Generator => std::iter::once(ctx.zero())
                .chain((1..=p as u64 - 1).map(|e| generator.pow(e)))
                .collect(),
        };
        debug_assert_eq!(eval_points.len(), p);
        Ok(RSCode {
            ctx,
            d,
            order,
            generator,
            eval_points,
        })
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Code length; the full field is used, so n = p.
    pub fn n(&self) -> usize {
        self.eval_points.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> EvalOrder {
        self.order
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn eval_points(&self) -> &[FieldElement] {
        &self.eval_points
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            p: self.ctx.modulus(),
            d: self.d,
            generator: self.generator.value(),
        }
    }

    /// Number of codewords, p^(d+1).
    pub fn message_count(&self) -> u128 {
        (self.ctx.modulus() as u128)
            .checked_pow(self.d as u32 + 1)
            .unwrap_or(u128::MAX)
    }

    /// Largest tau with 2*tau + 1 <= minimum distance n - d: the unique-
    /// decoding radius.
    pub fn tau_capability(&self) -> usize {
        (self.n() - self.d - 1) / 2
    }

    pub fn encode(&self, msg: &UniPoly) -> Result<Codeword, CodecError> {
        assert_eq!(msg.ctx(), self.ctx, "message from a different field");
        if let Degree::Finite(deg) = msg.degree() {
            if deg > self.d {
                return Err(CodecError::DegreeTooLarge {
                    got: deg,
                    bound: self.d,
                });
            }
        }
        Ok(Codeword {
            ctx: self.ctx,
            symbols: self.eval_points.iter().map(|&x| msg.eval(x)).collect(),
        })
    }
}

/// A received or transmitted word: one field symbol per evaluation point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    ctx: FieldCtx,
    symbols: Vec<FieldElement>,
}

impl Codeword {
    pub fn new(ctx: FieldCtx, symbols: Vec<FieldElement>) -> Self {
        for s in &symbols {
            assert_eq!(s.ctx(), ctx, "symbol from a different field");
        }
        Codeword { ctx, symbols }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }

    /// Parses the comma-separated decimal form produced by `Display`.
    pub fn parse(ctx: FieldCtx, s: &str) -> Result<Self, CodecError> {
        let symbols: Result<Vec<FieldElement>, _> =
            s.split(',').map(|part| ctx.parse_element(part)).collect();
        match symbols {
            Ok(symbols) => Ok(Codeword { ctx, symbols }),
            Err(_) => Err(CodecError::ParseCodeword(s.to_string())),
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Number of positions at which two equal-length words differ.
pub fn hamming_distance(a: &Codeword, b: &Codeword) -> Result<usize, CodecError> {
    assert_eq!(a.ctx, b.ctx, "codewords from different fields");
    if a.len() != b.len() {
        return Err(CodecError::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    Ok(a.symbols
        .iter()
        .zip(&b.symbols)
        .filter(|(x, y)| x != y)
        .count())
}

/// Replaces exactly `e` uniformly chosen distinct positions with uniformly
/// chosen *different* symbols. Returns the corrupted word and the sorted
/// list of changed positions. Fully determined by the seed.
pub fn corrupt(cw: &Codeword, e: usize, seed: u64) -> Result<(Codeword, Vec<usize>), CodecError> {
    let n = cw.len();
    if e > n {
        return Err(CodecError::TooManyErrors { e, n });
    }
    let ctx = cw.ctx;
    let p = ctx.modulus() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions = rand::seq::index::sample(&mut rng, n, e).into_vec();
    positions.sort_unstable();
    let mut symbols = cw.symbols.clone();
    for &pos in &positions {
        // Adding a uniform offset from [1, p) never reproduces the old symbol.
        let offset = ctx.element(rng.gen_range(1..p));
        symbols[pos] = symbols[pos] + offset;
    }
    Ok((Codeword { ctx, symbols }, positions))
}

fn message_from_index(ctx: FieldCtx, d: usize, idx: u64) -> UniPoly {
    let p = ctx.modulus() as u64;
    let mut coeffs = vec![ctx.zero(); d + 1];
    let mut rest = idx;
    // The constant coefficient is the most significant digit, so index
    // order is lexicographic order on (c0, ..., cd).
    for c in coeffs.iter_mut().rev() {
        *c = ctx.element(rest % p);
        rest /= p;
    }
    UniPoly::new(ctx, coeffs)
}

/// Nearest codeword by exhaustive scan over all p^(d+1) messages; ties go
/// to the lexicographically smallest message coefficient vector.
pub fn ml_decode_bruteforce(
    code: &RSCode,
    received: &Codeword,
    budget: u64,
) -> Result<Codeword, CodecError> {
    if received.len() != code.n() {
        return Err(CodecError::LengthMismatch {
            a: received.len(),
            b: code.n(),
        });
    }
    let candidates = code.message_count();
    if candidates > budget as u128 {
        return Err(CodecError::BudgetExceeded { candidates, budget });
    }
    let total = candidates as u64;
    let ctx = code.ctx;

    let score = |i: u64| -> (usize, u64) {
        let msg = message_from_index(ctx, code.d, i);
        let dist = code
            .eval_points
            .iter()
            .zip(&received.symbols)
            .filter(|&(&x, &y)| msg.eval(x) != y)
            .count();
        (dist, i)
    };

    // Minimizing the (distance, index) pair realizes the tie-break and is
    // independent of evaluation order, so the parallel and sequential
    // scans return the same winner.
    #[cfg(feature = "parallel")]
    let best = {
        use rayon::prelude::*;
        (0..total)
            .into_par_iter()
            .map(score)
            .min()
            .expect("p >= 2 candidates")
    };
    #[cfg(not(feature = "parallel"))]
    let best = (0..total).map(score).min().expect("p >= 2 candidates");

    code.encode(&message_from_index(ctx, code.d, best.1))
}

/// All codewords within Hamming distance `tau` of `received`, via the
/// polynomial-reconstruction core with agreement threshold t = n - tau.
pub fn list_decode_code(
    code: &RSCode,
    received: &Codeword,
    tau: usize,
) -> Result<Vec<Codeword>, CodecError> {
    assert!(code.d >= 1, "list decoding needs a positive degree bound");
    if received.len() != code.n() {
        return Err(CodecError::LengthMismatch {
            a: received.len(),
            b: code.n(),
        });
    }
    let n = code.n();
    let t_min = choose_parameters(n, code.d).t;
    if t_min > n {
        return Err(CodecError::GuaranteeUnavailable { t_min, n });
    }
    let max_tau = n - t_min;
    if tau > max_tau {
        return Err(CodecError::TauTooLarge { tau, max_tau });
    }
    let points: Vec<(FieldElement, FieldElement)> = code
        .eval_points
        .iter()
        .copied()
        .zip(received.symbols.iter().copied())
        .collect();
    let out = decoder::list_decode(code.ctx, &points, code.d, n - tau)?;
    out.candidates
        .into_iter()
        .map(|(f, _)| code.encode(&f))
        .collect()
}

/// Channel-sweep settings; the field and evaluation order define the code,
/// `budget` caps the brute-force baseline.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub d: usize,
    pub trials: usize,
    pub seed: u64,
    pub emax: usize,
    pub order: EvalOrder,
    pub budget: u64,
}

/// Aggregated outcome of all trials at one error count.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub e: usize,
    /// Fraction of trials where the nearest codeword was the transmitted one.
    pub unique_success: f64,
    /// Fraction of trials where the list contained the transmitted word.
    pub list_success: f64,
    pub mean_list_size: f64,
}

pub const EXPERIMENT_CSV_HEADER: &str = "e,unique_success,list_success,mean_list_size";

impl ExperimentRow {
    /// Fixed four-decimal formatting so identical runs emit identical bytes.
    pub fn csv_line(&self) -> String {
        format!(
            "{},{:.4},{:.4},{:.4}",
            self.e, self.unique_success, self.list_success, self.mean_list_size
        )
    }
}

/// splitmix64-style mix of the master seed and a trial counter, so trials
/// are decorrelated but reproducible in any execution order.
fn derive_seed(master: u64, counter: u64) -> u64 {
    let mut z = master.wrapping_add(counter.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// For each error count e = 0..=emax: corrupt `trials` random codewords
/// with exactly e errors, then decode each with both the brute-force
/// nearest-codeword baseline and the list decoder.
///
/// The list decoder runs at tau = min(e, largest admissible tau), so for
/// small e containment of the transmitted word is guaranteed and for large
/// e the strongest available guarantee is used.
pub fn run_experiment(
    ctx: FieldCtx,
    cfg: &ExperimentConfig,
) -> Result<Vec<ExperimentRow>, CodecError> {
    assert!(cfg.d >= 1, "list decoding needs a positive degree bound");
    assert!(cfg.trials >= 1, "need at least one trial");
    let code = RSCode::new(ctx, cfg.d, cfg.order)?;
    let n = code.n();
    if cfg.emax > n {
        return Err(CodecError::TooManyErrors { e: cfg.emax, n });
    }
    let t_min = choose_parameters(n, cfg.d).t;
    if t_min > n {
        return Err(CodecError::GuaranteeUnavailable { t_min, n });
    }
    let max_tau = n - t_min;
    let p = ctx.modulus() as u64;

    let run_trial = |e: usize, trial: usize| -> Result<(bool, bool, usize), CodecError> {
        let counter = (e * cfg.trials + trial) as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, 2 * counter));
        let coeffs: Vec<u64> = (0..=cfg.d).map(|_| rng.gen_range(0..p)).collect();
        let msg = UniPoly::from_values(ctx, &coeffs);
        let tx = code.encode(&msg)?;
        let (rx, _) = corrupt(&tx, e, derive_seed(cfg.seed, 2 * counter + 1))?;

        let unique = ml_decode_bruteforce(&code, &rx, cfg.budget)? == tx;
        let list = list_decode_code(&code, &rx, e.min(max_tau))?;
        Ok((unique, list.contains(&tx), list.len()))
    };

    let mut rows = Vec::with_capacity(cfg.emax + 1);
    for e in 0..=cfg.emax {
        #[cfg(feature = "parallel")]
        let outcomes: Result<Vec<(bool, bool, usize)>, CodecError> = {
            use rayon::prelude::*;
            (0..cfg.trials)
                .into_par_iter()
                .map(|trial| run_trial(e, trial))
                .collect()
        };
        #[cfg(not(feature = "parallel"))]
        let outcomes: Result<Vec<(bool, bool, usize)>, CodecError> =
            (0..cfg.trials).map(|trial| run_trial(e, trial)).collect();
        let outcomes = outcomes?;

        let trials = cfg.trials as f64;
        rows.push(ExperimentRow {
            e,
            unique_success: outcomes.iter().filter(|o| o.0).count() as f64 / trials,
            list_success: outcomes.iter().filter(|o| o.1).count() as f64 / trials,
            mean_list_size: outcomes.iter().map(|o| o.2).sum::<usize>() as f64 / trials,
        });
    }
    Ok(rows)
}
