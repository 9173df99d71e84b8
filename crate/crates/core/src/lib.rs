//! Signed-bit (signed-digit) real numbers as paths through the ternary
//! pseudotree of dyadic intervals.
//!
//! The crate is organised bottom-up:
//!
//! * [`dyadic`]: the pseudotree itself. A [`Node`] is the open interval
//!   `(k/2^n, (k+2)/2^n)`; every node has three children and one or two
//!   parents.
//! * [`streams`]: [`SignedBitNumber`], a start level plus a lazily evaluated
//!   digit sequence over `{-1, 0, +1}`, i.e. an infinite path through the
//!   pseudotree.
//! * [`arithmetic`]: negation, sums, rational scaling, min/max, products and
//!   a tri-valued comparison, all routed through approximation oracles.
//! * [`sequences`]: rational sequences, regularity, moduli of convergence
//!   and their extraction.
//! * [`ideals`]: o-ideals, c-ideals and Cauchy subsets of the pseudotree,
//!   truncated to finite level windows, with executable property checks.
//! * [`riesz`]: the Riesz space `Q^d`, the `Pos` predicate, signed-bit
//!   representations of finite element sets, and the correspondence between
//!   coordinate homomorphisms and o-ideals through them.
//!
//! Everything is exact: no floating point is used anywhere.

pub mod arithmetic;
pub mod dyadic;
pub mod ideals;
pub mod rational;
pub mod riesz;
pub mod sequences;
pub mod streams;

pub use dyadic::{Digit, Node, Role};
pub use rational::{format_rational, parse_rational, Rational};
pub use streams::{ApproximationOracle, SignedBitNumber};

/// A text-format error with the byte offset of the first offending character.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}
