//! Exact enumeration of restricted words over finite alphabets.
//!
//! Words are built by concatenating *building blocks* (a head letter `b`
//! followed by letters below `b`). The number of words assembled from an
//! admissible block count sequence `f0` is the invert transform of `f0`,
//! which also has a closed representation through partial Bell polynomials.
//!
//! The crate provides:
//!
//! * [`bellpoly`]: partial Bell polynomials (partition-sum oracle, recurrence
//!   table and four closed-form identities for special argument vectors).
//! * [`seqtransform`]: truncated integer sequences and the invert transform,
//!   computed by three independent routes, plus its inverse.
//! * [`wordmodel`]: building blocks, block selection, exhaustive generation of
//!   block words, unique decomposition and brute-force word counting.
//! * [`families`]: the catalog of restriction families with closed-form
//!   counters, and the cross-verification harness.
//! * [`bfile`], [`output`], [`args`]: text formats used by the command line.

pub mod args;
pub mod arith;
pub mod bellpoly;
pub mod bfile;
pub mod cli;
mod error;
pub mod families;
pub mod output;
pub mod seqtransform;
pub mod wordmodel;

pub use error::{Error, Result};
