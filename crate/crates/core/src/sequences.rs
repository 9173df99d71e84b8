//! Rational sequences, regularity and moduli of convergence.
//!
//! Sequences are 1-indexed. A sequence `q` is *regular* when
//! `|q_m - q_n| <= 1/m + 1/n` for all `m, n`, and `mu` is a *modulus of
//! convergence* for `q` when `m >= mu_i` and `n >= mu_j` imply
//! `|q_m - q_n| <= 1/i + 1/j`. The universally quantified conditions are
//! checked on finite prefixes only: passing is a necessary condition, not a
//! proof.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::rational::{parse_rational, ratio, Rational};
use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("no index up to k = {k} satisfies the scan condition for m = {m}; the witness or the sequence is invalid")]
    ContractViolation { m: u64, k: u64 },
    #[error("index {index} is beyond the {len} known terms")]
    OutOfRange { index: u64, len: u64 },
    #[error("line {line}: {error}")]
    Parse { line: usize, error: ParseError },
}

/// A deterministic rational sequence indexed from 1, possibly finite.
#[derive(Clone)]
pub struct RationalSequence {
    term: Arc<dyn Fn(u64) -> Rational + Send + Sync>,
    len: Option<u64>,
}

impl RationalSequence {
    pub fn new<F>(term: F) -> RationalSequence
    where
        F: Fn(u64) -> Rational + Send + Sync + 'static,
    {
        RationalSequence { term: Arc::new(term), len: None }
    }

    /// A finite sequence; `terms[0]` is the first term.
    pub fn from_terms(terms: Vec<Rational>) -> RationalSequence {
        let len = terms.len() as u64;
        let terms: Arc<[Rational]> = terms.into();
        RationalSequence {
            term: Arc::new(move |n| terms[(n - 1) as usize].clone()),
            len: Some(len),
        }
    }

    /// Number of known terms, `None` when unbounded.
    pub fn len(&self) -> Option<u64> {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == Some(0)
    }

    /// The `n`th term. Panics when `n == 0` or `n` is past the end.
    pub fn term(&self, n: u64) -> Rational {
        assert!(n >= 1, "sequences are 1-indexed");
        if let Some(len) = self.len {
            assert!(n <= len, "index {n} beyond the {len} known terms");
        }
        (self.term)(n)
    }

    fn ensure(&self, index: u64) -> Result<(), SequenceError> {
        match self.len {
            Some(len) if index > len => Err(SequenceError::OutOfRange { index, len }),
            _ => Ok(()),
        }
    }

    pub fn prefix(&self, count: u64) -> Vec<Rational> {
        (1..=count).map(|n| self.term(n)).collect()
    }
}

impl fmt::Debug for RationalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RationalSequence").field("len", &self.len).finish_non_exhaustive()
    }
}

/// A sequence of positive integers `i -> mu_i`.
#[derive(Clone)]
pub struct Modulus(Arc<dyn Fn(u64) -> u64 + Send + Sync>);

impl Modulus {
    pub fn new<F>(mu: F) -> Modulus
    where
        F: Fn(u64) -> u64 + Send + Sync + 'static,
    {
        Modulus(Arc::new(mu))
    }

    /// `mu_i = i`, the modulus of every regular sequence.
    pub fn identity() -> Modulus {
        Modulus::new(|i| i)
    }

    pub fn at(&self, i: u64) -> u64 {
        (self.0)(i).max(1)
    }
}

/// `eps -> k` with `|p_n - r| <= eps` for every `n >= k`.
#[derive(Clone)]
pub struct ConvergenceWitness(Arc<dyn Fn(&Rational) -> u64 + Send + Sync>);

impl ConvergenceWitness {
    pub fn new<F>(witness: F) -> ConvergenceWitness
    where
        F: Fn(&Rational) -> u64 + Send + Sync + 'static,
    {
        ConvergenceWitness(Arc::new(witness))
    }

    /// `eps -> ceil(c / eps)`, valid whenever `|p_n - r| <= c/n`.
    pub fn linear(c: Rational) -> ConvergenceWitness {
        ConvergenceWitness::new(move |eps| ceil_to_u64(&(&c / eps)))
    }

    pub fn at(&self, eps: &Rational) -> u64 {
        (self.0)(eps).max(1)
    }
}

fn ceil_to_u64(r: &Rational) -> u64 {
    let c = r.numer().div_ceil(r.denom());
    u64::try_from(c).unwrap_or(0)
}

fn reciprocal(n: u64) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(n))
}

/// `|q_m - q_n| <= 1/m + 1/n` for all `1 <= m, n <= limit`.
pub fn check_regular(q: &RationalSequence, limit: u64) -> bool {
    let terms = q.prefix(limit);
    for m in 1..=limit {
        for n in m + 1..=limit {
            let gap = (&terms[(m - 1) as usize] - &terms[(n - 1) as usize]).abs();
            if gap > reciprocal(m) + reciprocal(n) {
                return false;
            }
        }
    }
    true
}

/// The modulus condition for all `i, j <= max_index` and all
/// `mu_i <= m <= limit`, `mu_j <= n <= limit`.
pub fn check_modulus(q: &RationalSequence, mu: &Modulus, max_index: u64, limit: u64) -> bool {
    let terms = q.prefix(limit);
    // Suffix extrema: the worst |q_m - q_n| over two tails is a difference of
    // a maximum and a minimum.
    let mut suffix_max = terms.clone();
    let mut suffix_min = terms.clone();
    for idx in (0..terms.len().saturating_sub(1)).rev() {
        suffix_max[idx] = suffix_max[idx].clone().max(suffix_max[idx + 1].clone());
        suffix_min[idx] = suffix_min[idx].clone().min(suffix_min[idx + 1].clone());
    }
    let tail = |i: u64| {
        let from = mu.at(i);
        (from <= limit).then(|| ((from - 1) as usize, ()))
    };
    for i in 1..=max_index {
        let Some((a, ())) = tail(i) else { continue };
        for j in 1..=max_index {
            let Some((b, ())) = tail(j) else { continue };
            let spread = (&suffix_max[a] - &suffix_min[b]).max(&suffix_max[b] - &suffix_min[a]);
            if spread > reciprocal(i) + reciprocal(j) {
                return false;
            }
        }
    }
    true
}

/// Extracts `mu_m` for a sequence `p` converging to the limit of the regular
/// sequence `q`.
///
/// With `k = K(1/(6m))`, returns the smallest `mu <= k` such that
/// `|p_n - q_{3m}| <= 1/(2m)` for every `n` in `mu..=k`. Then
/// `|p_n - r| <= 1/m` for all `n >= mu`, and the answer does not depend on
/// which valid `k` the witness supplied.
pub fn compute_modulus(
    p: &RationalSequence,
    q: &RationalSequence,
    witness: &ConvergenceWitness,
    m: u64,
) -> Result<u64, SequenceError> {
    assert!(m >= 1, "m must be positive");
    let k = witness.at(&ratio(1, 6 * m as i64));
    p.ensure(k)?;
    q.ensure(3 * m)?;
    let anchor = q.term(3 * m);
    let bound = ratio(1, 2 * m as i64);
    let close = |n: u64| (p.term(n) - &anchor).abs() <= bound;
    if !close(k) {
        return Err(SequenceError::ContractViolation { m, k });
    }
    let mut mu = k;
    while mu > 1 && close(mu - 1) {
        mu -= 1;
    }
    Ok(mu)
}

/// `m -> q_{mu_m}`, a regular sequence whenever `mu` is a modulus for `q`.
pub fn regularize(q: &RationalSequence, mu: &Modulus) -> RationalSequence {
    let (q, mu) = (q.clone(), mu.clone());
    RationalSequence::new(move |m| q.term(mu.at(m)))
}

/// `{m in Z : |r - m/n| <= 1/n}`, in increasing order. Always nonempty, with
/// at most two between its least and greatest element.
pub fn approx_numerators(r: &Rational, n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "n must be positive");
    let scaled = r * Rational::from_integer(BigInt::from(n));
    let one = Rational::from_integer(BigInt::from(1));
    let low = (&scaled - &one).ceil().to_integer();
    let high = (&scaled + &one).floor().to_integer();
    num_iter::range_inclusive(low, high).collect()
}

/// Parses the sequence file format: one rational per line, line `n` holding
/// the `n`th term.
pub fn parse_sequence(text: &str) -> Result<Vec<Rational>, SequenceError> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            parse_rational(line.trim()).map_err(|error| SequenceError::Parse { line: i + 1, error })
        })
        .collect()
}
