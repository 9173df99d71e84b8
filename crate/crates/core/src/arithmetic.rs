//! Arithmetic on signed-bit numbers.
//!
//! Negation is digit-wise and exact, and scaling by a power of two is a pure
//! reindexing. Every other operation builds an approximation oracle from
//! its inputs' partial sums and hands it to
//! [`SignedBitNumber::from_oracle`]. Each oracle meets the `2^-k` contract
//! with a fixed precision padding:
//!
//! | operation      | oracle at precision `k`                       |
//! |----------------|-----------------------------------------------|
//! | `add`          | `x(k+1) + y(k+1)`                             |
//! | `average`      | `(x(k) + y(k)) / 2`                           |
//! | `scale(q, x)`  | `q x(k+s)`, `s = max(0, ceil(log2 abs q) + 1)`|
//! | `min`/`max`    | `min/max(x(k), y(k))`                         |
//! | `mul`          | `x(j) y(j)`, `j = k + 2 + ceil(log2(Bx+By+1))`|
//!
//! where `x(k)` is `x.approx(k)` and `Bx = 2^(1 - x.start())` bounds
//! `|x|`. Because the result of every operation is again a signed-bit
//! number satisfying the path invariant, composing operations adds no error
//! beyond what each one's own contract allows.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::rational::{ceil_log2, exact_log2, int, pow2, Rational};
use crate::streams::{Reindexed, SignedBitNumber};

pub fn negate(x: &SignedBitNumber) -> SignedBitNumber {
    SignedBitNumber::from_source(x.start(), Reindexed { base: x.clone(), shift: 0, negate: true })
}

pub fn add(x: &SignedBitNumber, y: &SignedBitNumber) -> SignedBitNumber {
    let (x, y) = (x.clone(), y.clone());
    SignedBitNumber::from_oracle(move |k: i64| x.approx(k + 1) + y.approx(k + 1))
}

pub fn sub(x: &SignedBitNumber, y: &SignedBitNumber) -> SignedBitNumber {
    add(x, &negate(y))
}

/// `(x + y) / 2`.
pub fn average(x: &SignedBitNumber, y: &SignedBitNumber) -> SignedBitNumber {
    let (x, y) = (x.clone(), y.clone());
    SignedBitNumber::from_oracle(move |k: i64| (x.approx(k) + y.approx(k)) / int(2))
}

/// `q * x`. Powers of two (and their negatives) reindex the digits directly.
pub fn scale(q: &Rational, x: &SignedBitNumber) -> SignedBitNumber {
    if q.is_zero() {
        return SignedBitNumber::zero();
    }
    if let Some(e) = exact_log2(&q.abs()) {
        // sum a_i 2^-i * 2^e = sum a_{j+e} 2^-j
        return SignedBitNumber::from_source(
            x.start() - e,
            Reindexed { base: x.clone(), shift: e, negate: q.is_negative() },
        );
    }
    let padding = (ceil_log2(&q.abs()) + 1).max(0);
    let (q, x) = (q.clone(), x.clone());
    SignedBitNumber::from_oracle(move |k: i64| &q * x.approx(k + padding))
}

pub fn min(x: &SignedBitNumber, y: &SignedBitNumber) -> SignedBitNumber {
    let (x, y) = (x.clone(), y.clone());
    SignedBitNumber::from_oracle(move |k: i64| x.approx(k).min(y.approx(k)))
}

pub fn max(x: &SignedBitNumber, y: &SignedBitNumber) -> SignedBitNumber {
    let (x, y) = (x.clone(), y.clone());
    SignedBitNumber::from_oracle(move |k: i64| x.approx(k).max(y.approx(k)))
}

pub fn mul(x: &SignedBitNumber, y: &SignedBitNumber) -> SignedBitNumber {
    // |ab - xy| <= |a||b - y| + |y||a - x| <= (Bx + 2^-j + By) 2^-j
    let bound = x.magnitude_bound() + y.magnitude_bound() + int(1);
    let padding = 2 + ceil_log2(&bound).max(0);
    let (x, y) = (x.clone(), y.clone());
    SignedBitNumber::from_oracle(move |k: i64| {
        let j = k + padding;
        x.approx(j) * y.approx(j)
    })
}

/// Outcome of comparing two numbers at a finite precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    /// The values differ by at most `2^(2 - level)`.
    Within(i64),
}

/// Tri-valued comparison at level `level`: `Less` and `Greater` are certain;
/// `Within(level)` certifies `|x - y| <= 2^(2 - level)`.
pub fn compare(x: &SignedBitNumber, y: &SignedBitNumber, level: i64) -> Comparison {
    let radius = pow2(-level);
    let (a, b) = (x.approx(level), y.approx(level));
    if &a + &radius < &b - &radius {
        Comparison::Less
    } else if &b + &radius < &a - &radius {
        Comparison::Greater
    } else {
        Comparison::Within(level)
    }
}

impl Comparison {
    /// The ordering when it was decided.
    pub fn ordering(&self) -> Option<Ordering> {
        match self {
            Comparison::Less => Some(Ordering::Less),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Within(_) => None,
        }
    }
}
