//! List decoding of Reed-Solomon codes over prime fields.
//!
//! Given `n` points and a degree bound `d`, the decoder recovers *every*
//! polynomial of degree at most `d` that agrees with at least `t` of the
//! points, for agreement thresholds well below what unique decoding needs.
//! The pipeline: interpolate a nonzero bivariate polynomial of bounded
//! weighted degree through all points ([`interp`]), factor out its
//! univariate roots in the second variable ([`rootfind`]), then keep the
//! candidates with enough agreement ([`decoder`]). A grid variant handles
//! multivariate reconstruction, and [`codec`] wraps the decoder in a
//! Reed-Solomon encode/corrupt/decode loop with a channel-simulation
//! experiment driver.
//!
//! The `parallel` feature (on by default) runs the hot loops on rayon;
//! disabling it yields a dependency-free sequential build with identical
//! outputs.

pub mod codec;
pub mod decoder;
pub mod field;
pub mod interp;
pub mod poly;
pub mod rootfind;

pub use codec::{Codeword, EvalOrder, RSCode};
pub use decoder::{DecoderParams, GridInstance};
pub use field::{FieldCtx, FieldElement};
pub use poly::{Degree, MultiPoly, UniPoly};
