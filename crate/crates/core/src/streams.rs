//! Signed-bit numbers: infinite paths through the pseudotree.
//!
//! A [`SignedBitNumber`] has a start index `n` and digits `a_i` for `i >= n`
//! (every earlier digit is 0). It denotes `sum a_i 2^-i`. Writing
//! `m_l = sum_{i=n}^{l} a_i 2^-i`, the path invariant is
//! `|value - m_l| <= 2^-l` for every level `l`: the value lies in the closed
//! level-`l` node centred on `m_l`. The path starts at the level `n-1` node
//! with midpoint 0, and digit `a_{l+1}` picks the λ, μ or ρ child of the
//! level-`l` node.
//!
//! Digits are produced on demand and memoized behind a mutex, so a number is
//! cheap to clone and safe to share across threads; repeated queries always
//! observe the same digits.
//!
//! # Margins in [`SignedBitNumber::from_oracle`]
//!
//! The oracle-driven construction keeps the stronger invariant
//! `|r - m_l| <= (3/4) 2^-l`. At each step it asks the oracle for
//! `A(l+4)`, so `|A(l+4) - r| <= 2^-(l+4)`, and picks the offset in
//! `{-2^-(l+1), 0, 2^-(l+1)}` nearest to `A(l+4) - m_l`. That difference is
//! at most `(3/4 + 1/16) 2^-l` in size, so the nearest offset is within
//! `(5/16) 2^-l` of it, and the new error is at most
//! `(5/16 + 1/16) 2^-l = (3/4) 2^-(l+1)`.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dyadic::{Digit, Node};
use crate::rational::{ceil_log2, pow2, ratio, Rational};
use crate::ParseError;

/// A real number given by arbitrarily good rational approximations:
/// `|approximate(k) - r| <= 2^-k` for every integer `k`.
///
/// Implementations must be deterministic.
pub trait ApproximationOracle: Send + Sync {
    fn approximate(&self, precision: i64) -> Rational;
}

impl<F> ApproximationOracle for F
where
    F: Fn(i64) -> Rational + Send + Sync,
{
    fn approximate(&self, precision: i64) -> Rational {
        self(precision)
    }
}

/// Produces the digit at `index` given the value `m_{index-1}` of the path so
/// far. Called once per index, in increasing order.
pub(crate) trait DigitSource: Send {
    fn next_digit(&mut self, index: i64, prefix: &Rational) -> Digit;
}

struct Greedy {
    target: Rational,
}

impl DigitSource for Greedy {
    fn next_digit(&mut self, index: i64, prefix: &Rational) -> Digit {
        nearest_offset(&(&self.target - prefix), index)
    }
}

struct OracleDriven {
    oracle: Arc<dyn ApproximationOracle>,
}

impl DigitSource for OracleDriven {
    fn next_digit(&mut self, index: i64, prefix: &Rational) -> Digit {
        // index = l + 1, so this queries A(l + 4).
        let estimate = self.oracle.approximate(index + 3);
        nearest_offset(&(estimate - prefix), index)
    }
}

struct Explicit {
    digits: Arc<dyn Fn(i64) -> Digit + Send + Sync>,
}

impl DigitSource for Explicit {
    fn next_digit(&mut self, index: i64, _prefix: &Rational) -> Digit {
        (self.digits)(index)
    }
}

/// Digits read from another number, reindexed and optionally negated.
pub(crate) struct Reindexed {
    pub(crate) base: SignedBitNumber,
    pub(crate) shift: i64,
    pub(crate) negate: bool,
}

impl DigitSource for Reindexed {
    fn next_digit(&mut self, index: i64, _prefix: &Rational) -> Digit {
        let digit = self.base.digit(index + self.shift);
        if self.negate {
            digit.negate()
        } else {
            digit
        }
    }
}

/// The digit `a` in `{-1, 0, 1}` minimising `|gap - a 2^-index|`, ties to 0.
fn nearest_offset(gap: &Rational, index: i64) -> Digit {
    // |gap| < half a step (2^-(index+1)) rounds to 0; exactly half ties to 0.
    let half_step = pow2(-(index + 1));
    if gap.abs() <= half_step {
        Digit::Zero
    } else if gap.is_positive() {
        Digit::Plus
    } else {
        Digit::Minus
    }
}

struct Expansion {
    source: Box<dyn DigitSource>,
    digits: Vec<Digit>,
    /// `scaled[j] = m_{start+j} * 2^(start+j)`, an integer.
    scaled: Vec<BigInt>,
}

/// A signed-bit real number: a start index and a lazily evaluated digit
/// sequence. See the [module docs](self).
#[derive(Clone)]
pub struct SignedBitNumber {
    start: i64,
    expansion: Arc<Mutex<Expansion>>,
}

impl SignedBitNumber {
    pub(crate) fn from_source(start: i64, source: impl DigitSource + 'static) -> SignedBitNumber {
        SignedBitNumber {
            start,
            expansion: Arc::new(Mutex::new(Expansion {
                source: Box::new(source),
                digits: Vec::new(),
                scaled: Vec::new(),
            })),
        }
    }

    pub fn zero() -> SignedBitNumber {
        SignedBitNumber::from_digits(0, |_| Digit::Zero)
    }

    /// A number from an explicit digit oracle. `digits` is only consulted at
    /// indices `>= start`.
    pub fn from_digits<F>(start: i64, digits: F) -> SignedBitNumber
    where
        F: Fn(i64) -> Digit + Send + Sync + 'static,
    {
        SignedBitNumber::from_source(start, Explicit { digits: Arc::new(digits) })
    }

    /// The greedy expansion of a rational.
    ///
    /// The start index is the largest `n` with `|r| <= 2^-n` (0 for `r = 0`),
    /// and each digit moves the midpoint as close to `r` as possible,
    /// preferring 0 on ties.
    pub fn from_rational(r: &Rational) -> SignedBitNumber {
        let start = if r.is_zero() { 0 } else { -ceil_log2(&r.abs()) };
        SignedBitNumber::from_source(start, Greedy { target: r.clone() })
    }

    /// A number from any approximation oracle. See the module docs for the
    /// margin argument.
    ///
    /// The start index is found by walking down from 0 until
    /// `|A(n+4)| <= 2^-(n+1)`, which puts the value within `(3/4) 2^-(n-1)` of
    /// the midpoint-0 start node at level `n-1`.
    pub fn from_oracle<A>(oracle: A) -> SignedBitNumber
    where
        A: ApproximationOracle + 'static,
    {
        SignedBitNumber::from_shared_oracle(Arc::new(oracle))
    }

    pub fn from_shared_oracle(oracle: Arc<dyn ApproximationOracle>) -> SignedBitNumber {
        let mut start = 0i64;
        while oracle.approximate(start + 4).abs() > pow2(-(start + 1)) {
            start -= 1;
        }
        SignedBitNumber::from_source(start, OracleDriven { oracle })
    }

    /// First index that may carry a nonzero digit.
    pub fn start(&self) -> i64 {
        self.start
    }

    /// `|value| <= 2^(1 - start)`.
    pub fn magnitude_bound(&self) -> Rational {
        pow2(1 - self.start)
    }

    fn with_expansion<T>(&self, through: i64, read: impl FnOnce(&Expansion) -> T) -> T {
        let mut expansion = self.expansion.lock().expect("digit cache poisoned");
        let wanted = usize::try_from(through - self.start + 1).unwrap_or(0);
        while expansion.digits.len() < wanted {
            let index = self.start + expansion.digits.len() as i64;
            let previous = expansion.scaled.last().cloned().unwrap_or_default();
            let prefix = Rational::new(previous.clone(), BigInt::from(1)) * pow2(1 - index);
            let digit = expansion.source.next_digit(index, &prefix);
            expansion.digits.push(digit);
            expansion.scaled.push(previous * 2 + digit.value());
        }
        read(&expansion)
    }

    /// The digit at `index` (0 below the start).
    pub fn digit(&self, index: i64) -> Digit {
        if index < self.start {
            return Digit::Zero;
        }
        self.with_expansion(index, |e| e.digits[(index - self.start) as usize])
    }

    /// Digits at indices `start..=through`.
    pub fn digits_through(&self, through: i64) -> Vec<Digit> {
        if through < self.start {
            return Vec::new();
        }
        self.with_expansion(through, |e| e.digits[..=(through - self.start) as usize].to_vec())
    }

    /// The midpoint `m_l` after consuming digits through index `level`;
    /// `|value - m_l| <= 2^-level`. Below the start this is 0, which still
    /// satisfies the bound.
    pub fn approx(&self, level: i64) -> Rational {
        if level < self.start {
            return Rational::zero();
        }
        let scaled = self.with_expansion(level, |e| e.scaled[(level - self.start) as usize].clone());
        Rational::new(scaled, BigInt::from(1)) * pow2(-level)
    }

    /// The level-`level` node of the path, centred on [`approx`](Self::approx).
    pub fn path_node(&self, level: i64) -> Node {
        Node::with_midpoint(&self.approx(level), level).expect("path midpoints are level dyadics")
    }

    /// The first `depth - start + 1` digits in text form.
    pub fn truncate(&self, depth: i64) -> DigitString {
        DigitString { start: self.start, digits: self.digits_through(depth), depth }
    }
}

impl ApproximationOracle for SignedBitNumber {
    fn approximate(&self, precision: i64) -> Rational {
        self.approx(precision)
    }
}

impl fmt::Debug for SignedBitNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let known = self.expansion.lock().map(|e| e.digits.len()).unwrap_or(0);
        f.debug_struct("SignedBitNumber")
            .field("start", &self.start)
            .field("known_digits", &known)
            .finish()
    }
}

/// A finite prefix of a digit stream in the text format
///
/// ```text
/// start=<n>
/// <digits over - 0 +, index n first>
/// depth=<l>
/// ```
///
/// The `depth` line is optional on input; without it the digit string is
/// taken to be complete, ending at index `n + len - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    pub start: i64,
    pub digits: Vec<Digit>,
    pub depth: i64,
}

impl DigitString {
    /// The number whose digits are these followed by zeros. Its value is the
    /// level-`depth` midpoint of the original stream.
    pub fn to_number(&self) -> SignedBitNumber {
        let digits: Arc<[Digit]> = self.digits.clone().into();
        let start = self.start;
        SignedBitNumber::from_digits(start, move |i| {
            digits.get((i - start) as usize).copied().unwrap_or(Digit::Zero)
        })
    }

    pub fn midpoint(&self) -> Rational {
        let mut value = Rational::zero();
        for (offset, digit) in self.digits.iter().enumerate() {
            value += ratio(digit.value().into(), 1) * pow2(-(self.start + offset as i64));
        }
        value
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start={}", self.start)?;
        let digits: String = self.digits.iter().map(|d| d.symbol()).collect();
        writeln!(f, "{digits}")?;
        write!(f, "depth={}", self.depth)
    }
}

impl FromStr for DigitString {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<DigitString, ParseError> {
        let mut offset = 0;
        let mut lines = Vec::new();
        for line in text.split_inclusive('\n') {
            let body = line.trim_end_matches(['\n', '\r']);
            lines.push((offset, body));
            offset += line.len();
        }
        while matches!(lines.last(), Some((_, "")) ) {
            lines.pop();
        }
        let field = |(at, line): (usize, &str), key: &str| -> Result<i64, ParseError> {
            let value = line
                .strip_prefix(key)
                .ok_or_else(|| ParseError::new(at, format!("expected '{key}'")))?;
            value
                .parse()
                .map_err(|_| ParseError::new(at + key.len(), "expected an integer"))
        };
        let (first, second, third) = match lines.as_slice() {
            [a, b] => (*a, *b, None),
            [a, b, c] => (*a, *b, Some(*c)),
            _ => return Err(ParseError::new(offset, "expected two or three lines")),
        };
        let start = field(first, "start=")?;
        let (digits_at, digit_text) = second;
        let digits = digit_text
            .char_indices()
            .map(|(i, c)| Digit::from_symbol(c).ok_or_else(|| ParseError::new(digits_at + i, "expected '-', '0' or '+'")))
            .collect::<Result<Vec<_>, _>>()?;
        let depth = match third {
            Some(line) => field(line, "depth=")?,
            None => start + digits.len() as i64 - 1,
        };
        if depth - start + 1 != digits.len() as i64 && !(digits.is_empty() && depth < start) {
            return Err(ParseError::new(digits_at, "digit count does not match start and depth"));
        }
        Ok(DigitString { start, digits, depth })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::Role;
    use crate::rational::{int, ratio};

    #[test]
    fn zero_is_all_zero_digits() {
        let zero = SignedBitNumber::from_rational(&int(0));
        assert_eq!(zero.start(), 0);
        assert!(zero.digits_through(30).iter().all(|d| *d == Digit::Zero));
        for l in -3..20 {
            assert_eq!(zero.approx(l), int(0));
            assert_eq!(zero.path_node(l), Node::new(-1, l));
        }
    }

    #[test]
    fn one_half_is_a_single_digit() {
        let half = SignedBitNumber::from_rational(&ratio(1, 2));
        assert_eq!(half.start(), 1);
        assert_eq!(half.digit(1), Digit::Plus);
        assert!(half.digits_through(40)[1..].iter().all(|d| *d == Digit::Zero));
        for l in 1..40 {
            assert_eq!(half.approx(l), ratio(1, 2));
        }
        assert_eq!(half.path_node(2).midpoint(), ratio(1, 2));
    }

    // Independent check of the greedy expansion of 1/3: replay the digits and
    // compare each partial sum against 1/3 with exact arithmetic.
    #[test]
    fn one_third_prefix_and_bounds() {
        let third = ratio(1, 3);
        let x = SignedBitNumber::from_rational(&third);
        assert_eq!(x.start(), 1);
        let digits = x.digits_through(12);
        let text: String = digits.iter().map(|d| d.symbol()).collect();
        // m_1 = 1/2; then the gap alternates sign: 1/3 = 1/2 - 1/4 + 1/8 - ...
        assert_eq!(text, "+-+-+-+-+-+-");
        let mut partial = Rational::zero();
        for (i, d) in x.digits_through(40).iter().enumerate() {
            let index = 1 + i as i64;
            partial += ratio(d.value().into(), 1) * pow2(-index);
            assert!((&partial - &third).abs() <= pow2(-index), "level {index}");
            assert_eq!(partial, x.approx(index));
        }
        assert!((x.approx(10) - &third).abs() <= pow2(-10));
    }

    #[test]
    fn path_nodes_follow_digit_roles() {
        let x = SignedBitNumber::from_rational(&ratio(-5, 7));
        for l in x.start() - 1..30 {
            let node = x.path_node(l);
            let next = x.path_node(l + 1);
            assert!(node.contains(&next));
            assert_eq!(node.child(x.digit(l + 1).role()), next);
        }
        assert!(x.path_node(x.start() - 1).is_midpoint_zero());
        assert_eq!(Digit::Plus.role(), Role::Right);
    }

    #[test]
    fn oracle_zero() {
        let x = SignedBitNumber::from_oracle(|_k: i64| int(0));
        assert!(x.digits_through(20).iter().all(|d| *d == Digit::Zero));
    }

    #[test]
    fn oracle_one_third_from_truncations() {
        // A(k) = floor(2^k / 3) / 2^k, within 2^-k of 1/3.
        let oracle = |k: i64| {
            let scale = pow2(k);
            let scaled = (&scale * ratio(1, 3)).floor();
            scaled / scale
        };
        let x = SignedBitNumber::from_oracle(oracle);
        for l in x.start()..60 {
            assert!((x.approx(l) - ratio(1, 3)).abs() <= pow2(-l) * ratio(3, 4), "level {l}");
        }
    }

    #[test]
    fn oracle_start_walks_down_for_large_values() {
        let x = SignedBitNumber::from_oracle(|_k: i64| int(100));
        assert!(x.start() <= -7);
        assert!(int(100) <= x.magnitude_bound());
        assert_eq!(x.approx(30), int(100));
    }

    #[test]
    fn text_round_trip() {
        let x = SignedBitNumber::from_rational(&ratio(-3, 8));
        let text = x.truncate(6).to_string();
        assert_eq!(text, "start=1\n-0+000\ndepth=6");
        let parsed: DigitString = text.parse().unwrap();
        assert_eq!(parsed, x.truncate(6));
        assert_eq!(parsed.midpoint(), ratio(-3, 8));
        assert_eq!(parsed.to_number().approx(10), ratio(-3, 8));
        let untruncated: DigitString = "start=2\n+-\n".parse().unwrap();
        assert_eq!(untruncated.depth, 3);
        assert_eq!(untruncated.midpoint(), ratio(1, 8));
    }

    #[test]
    fn text_errors() {
        assert_eq!("start=1\n0x\n".parse::<DigitString>().unwrap_err().offset, 9);
        assert_eq!("begin=1\n0\n".parse::<DigitString>().unwrap_err().offset, 0);
        assert!("start=1\n00\ndepth=5".parse::<DigitString>().is_err());
        assert!("start=1".parse::<DigitString>().is_err());
    }

    #[test]
    fn shared_across_threads() {
        let x = SignedBitNumber::from_rational(&ratio(2, 7));
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let x = x.clone();
                std::thread::spawn(move || x.digits_through(20 + t))
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for r in &results {
            assert_eq!(r[..20], results[0][..20]);
        }
    }
}
