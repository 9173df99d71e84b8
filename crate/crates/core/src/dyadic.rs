//! The ternary pseudotree of dyadic intervals.
//!
//! A node `(k, n)` is the open interval `(k/2^n, (k+2)/2^n)`: level `n`,
//! radius `2^-n`, midpoint `(k+1)/2^n`. The structure extends without bound
//! in every direction, so there is no root and nothing here is global.
//! "Down" means toward larger intervals: the ancestors of a node lie below
//! it, its descendants (subintervals) above.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{exact_log2, mul_pow2, parse_integer, pow2, Rational};
use crate::ParseError;

/// One signed binary digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Digit {
    Minus,
    Zero,
    Plus,
}

impl Digit {
    pub fn value(self) -> i8 {
        match self {
            Digit::Minus => -1,
            Digit::Zero => 0,
            Digit::Plus => 1,
        }
    }

    pub fn from_value(value: i8) -> Option<Digit> {
        match value {
            -1 => Some(Digit::Minus),
            0 => Some(Digit::Zero),
            1 => Some(Digit::Plus),
            _ => None,
        }
    }

    /// The character used by the digit-stream text format.
    pub fn symbol(self) -> char {
        match self {
            Digit::Minus => '-',
            Digit::Zero => '0',
            Digit::Plus => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Digit> {
        match c {
            '-' => Some(Digit::Minus),
            '0' => Some(Digit::Zero),
            '+' => Some(Digit::Plus),
            _ => None,
        }
    }

    pub fn negate(self) -> Digit {
        match self {
            Digit::Minus => Digit::Plus,
            Digit::Zero => Digit::Zero,
            Digit::Plus => Digit::Minus,
        }
    }

    pub fn role(self) -> Role {
        match self {
            Digit::Minus => Role::Left,
            Digit::Zero => Role::Middle,
            Digit::Plus => Role::Right,
        }
    }
}

/// Which child of its parent a node is: λ, μ or ρ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Left,
    Middle,
    Right,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::Left, Role::Middle, Role::Right];

    fn offset(self) -> i64 {
        match self {
            Role::Left => 0,
            Role::Middle => 1,
            Role::Right => 2,
        }
    }

    pub fn digit(self) -> Digit {
        match self {
            Role::Left => Digit::Minus,
            Role::Middle => Digit::Zero,
            Role::Right => Digit::Plus,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Left => "λ",
            Role::Middle => "μ",
            Role::Right => "ρ",
        })
    }
}

/// A pseudotree node, the open dyadic interval `(k/2^n, (k+2)/2^n)`.
///
/// Nodes order by level first and then by `k`, which is the order used by
/// every serialization in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    level: i64,
    k: BigInt,
}

impl Node {
    pub fn new(k: impl Into<BigInt>, level: i64) -> Node {
        Node { level, k: k.into() }
    }

    /// The level-`level` node whose midpoint is `midpoint`, if there is one.
    pub fn with_midpoint(midpoint: &Rational, level: i64) -> Option<Node> {
        let scaled = mul_pow2(midpoint, level);
        scaled.is_integer().then(|| Node::new(scaled.to_integer() - 1, level))
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn left(&self) -> Rational {
        Rational::new(self.k.clone(), BigInt::one()) * pow2(-self.level)
    }

    pub fn right(&self) -> Rational {
        Rational::from_integer(&self.k + 2) * pow2(-self.level)
    }

    pub fn midpoint(&self) -> Rational {
        Rational::from_integer(&self.k + 1) * pow2(-self.level)
    }

    pub fn radius(&self) -> Rational {
        pow2(-self.level)
    }

    pub fn length(&self) -> Rational {
        pow2(1 - self.level)
    }

    pub fn child(&self, role: Role) -> Node {
        Node::new(&self.k * 2 + role.offset(), self.level + 1)
    }

    /// `[λI, μI, ρI]`.
    pub fn children(&self) -> [Node; 3] {
        Role::ALL.map(|role| self.child(role))
    }

    /// Every parent together with the role this node plays under it.
    ///
    /// Odd `k` has the single parent `((k-1)/2, n-1)` (as μ); even `k` has
    /// `(k/2, n-1)` (as λ) and `((k-2)/2, n-1)` (as ρ).
    pub fn parents(&self) -> Vec<(Node, Role)> {
        let level = self.level - 1;
        if self.k.is_odd() {
            vec![(Node::new((&self.k - 1) >> 1u32, level), Role::Middle)]
        } else {
            vec![
                (Node::new(&self.k >> 1u32, level), Role::Left),
                (Node::new((&self.k - 2) >> 1u32, level), Role::Right),
            ]
        }
    }

    /// Canonical parent: the one under which this node is λ, or the unique
    /// parent when there is only one.
    pub fn parent(&self) -> Node {
        self.parents().swap_remove(0).0
    }

    /// Whether `other` is a subinterval of `self` (reflexive).
    pub fn contains(&self, other: &Node) -> bool {
        if other.level < self.level {
            return false;
        }
        // Compare endpoints at the finer level: left_s * 2^d <= left_o and
        // right_o <= right_s * 2^d with d = other.level - self.level.
        let d = (other.level - self.level) as u64;
        let left = &self.k << d;
        let right = (&self.k + 2) << d;
        left <= other.k && &other.k + 2 <= right
    }

    /// Whether the point lies in the open interval.
    pub fn contains_point(&self, r: &Rational) -> bool {
        let scaled = mul_pow2(r, self.level);
        let k = Rational::from_integer(self.k.clone());
        k < scaled && scaled < k + Rational::from_integer(BigInt::from(2))
    }

    /// Whether the point lies in the closed interval.
    pub fn closure_contains(&self, r: &Rational) -> bool {
        let scaled = mul_pow2(r, self.level);
        let k = Rational::from_integer(self.k.clone());
        k <= scaled && scaled <= k + Rational::from_integer(BigInt::from(2))
    }

    /// The node equal to the intersection of the two intervals, when that
    /// intersection is a nonempty open interval of node form.
    pub fn join(&self, other: &Node) -> Option<Node> {
        if self.contains(other) {
            return Some(other.clone());
        }
        if other.contains(self) {
            return Some(self.clone());
        }
        let lo = self.left().max(other.left());
        let hi = self.right().min(other.right());
        if lo >= hi {
            return None;
        }
        let level = 1 - exact_log2(&(hi - &lo))?;
        let k = mul_pow2(&lo, level);
        k.is_integer().then(|| Node::new(k.to_integer(), level))
    }

    /// `λ^i` of this node.
    pub fn leftmost_descendant(&self, i: u32) -> Node {
        Node::new(&self.k << i, self.level + i64::from(i))
    }

    /// `ρ^i` of this node.
    pub fn rightmost_descendant(&self, i: u32) -> Node {
        Node::new(((&self.k + 2) << i) - 2, self.level + i64::from(i))
    }

    /// `{λ^i I, ρ^i I : 1 <= i <= depth}`, λ-chain first.
    pub fn extreme_descendants(&self, depth: u32) -> Vec<Node> {
        let lefts = (1..=depth).map(|i| self.leftmost_descendant(i));
        let rights = (1..=depth).map(|i| self.rightmost_descendant(i));
        lefts.chain(rights).collect()
    }

    /// Whether `self` is `λ^i` or `ρ^i` of `ancestor` for some `i >= 1`.
    pub fn is_extreme_descendant_of(&self, ancestor: &Node) -> bool {
        let depth = self.level - ancestor.level;
        if depth < 1 || !ancestor.contains(self) {
            return false;
        }
        let depth = depth as u32;
        *self == ancestor.leftmost_descendant(depth) || *self == ancestor.rightmost_descendant(depth)
    }

    /// The node at the same level shifted by `offset` positions.
    pub fn shifted(&self, offset: i64) -> Node {
        Node::new(&self.k + offset, self.level)
    }

    pub fn is_midpoint_zero(&self) -> bool {
        (&self.k + 1u32).is_zero()
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.level)
    }
}

impl FromStr for Node {
    type Err = ParseError;

    /// Parses `(<k>,<n>)`.
    fn from_str(text: &str) -> Result<Node, ParseError> {
        let inner = text
            .strip_prefix('(')
            .ok_or_else(|| ParseError::new(0, "expected '('"))?;
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| ParseError::new(text.len(), "expected ')'"))?;
        let comma = inner
            .find(',')
            .ok_or_else(|| ParseError::new(1 + inner.len(), "expected ','"))?;
        let k = parse_integer(&inner[..comma], 1, true)?;
        let level_at = 2 + comma;
        let level = parse_integer(&inner[comma + 1..], level_at, true)?;
        let level = i64::try_from(level).map_err(|_| ParseError::new(level_at, "level out of range"))?;
        Ok(Node::new(k, level))
    }
}
