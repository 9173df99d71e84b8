//! Ideals of the pseudotree determined by a real number.
//!
//! For a real `r`, `O_r` is the set of nodes whose open interval contains
//! `r` and `C_r` the set whose closure does. Both are infinite; this module
//! works with their restrictions to a finite window of levels
//! ([`IdealTruncation`]), with Cauchy subsets ([`CauchySubset`]), and with
//! the enumeration of `O_r` from a sequence converging to `r`
//! ([`o_enumerate`]).
//!
//! Witness reals are rationals, so membership is exact. For a real given
//! only as a [`SignedBitNumber`], [`o_membership`] and [`c_membership`]
//! answer with a third value when the precision asked for does not settle
//! the question.
//!
//! Closure properties are asserted only where a window can witness them:
//! conditions that mention children are checked below the top level, and
//! conditions that mention parents above the bottom level.

mod cauchy;
mod checks;
mod enumerate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::dyadic::Node;
use crate::rational::{mul_pow2, parse_rational, pow2, Fraction, Rational};
use crate::streams::SignedBitNumber;
use crate::ParseError;

pub use cauchy::{
    cauchy_check, cauchy_from_sequence, closure_distance, is_unblocked, limit_bounds, CauchyError, CauchySubset,
};
pub use checks::{
    check_c_properties, check_o_ideal, check_o_ideal_with, o_ideal_violation, CPropertyReport,
    OIdealViolation, PropertyOutcome,
};
pub use enumerate::{o_enumerate, o_enumerate_with, Enumeration};

/// Which of the two ideals a truncation samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Open containment.
    O,
    /// Closed containment.
    C,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::O => "O",
            Kind::C => "C",
        })
    }
}

/// `(floor(r 2^l), whether r 2^l is an integer)`.
fn scaled_floor(r: &Rational, level: i64) -> (BigInt, bool) {
    let t = mul_pow2(r, level);
    (t.numer().div_floor(t.denom()), t.is_integer())
}

/// The level-`level` nodes whose open interval contains `r`: one node when
/// `r` is a level-`level` endpoint, two otherwise.
pub fn o_slice(r: &Rational, level: i64) -> BTreeSet<Node> {
    let (f, exact) = scaled_floor(r, level);
    if exact {
        BTreeSet::from([Node::new(f - 1, level)])
    } else {
        BTreeSet::from([Node::new(&f - 1, level), Node::new(f, level)])
    }
}

/// The level-`level` nodes whose closure contains `r`: three adjacent nodes
/// when `r` is a level-`level` endpoint, two otherwise.
pub fn c_slice(r: &Rational, level: i64) -> BTreeSet<Node> {
    let (f, exact) = scaled_floor(r, level);
    let low = if exact { &f - 2 } else { &f - 1 };
    num_iter::range_inclusive(low, f).map(|k| Node::new(k, level)).collect()
}

/// Three-valued membership of an approximated real.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    /// The approximation at the requested precision straddles an endpoint.
    Unknown,
}

fn bracket(x: &SignedBitNumber, precision: i64) -> (Rational, Rational) {
    let a = x.approx(precision);
    let e = pow2(-precision);
    (&a - &e, a + e)
}

/// Whether `x` lies in the open interval of `node`, decided from
/// `x.approx(precision)`.
pub fn o_membership(x: &SignedBitNumber, node: &Node, precision: i64) -> Membership {
    let (lo, hi) = bracket(x, precision);
    if node.left() < lo && hi < node.right() {
        Membership::In
    } else if hi <= node.left() || lo >= node.right() {
        Membership::Out
    } else {
        Membership::Unknown
    }
}

/// Whether `x` lies in the closure of `node`, decided from
/// `x.approx(precision)`.
pub fn c_membership(x: &SignedBitNumber, node: &Node, precision: i64) -> Membership {
    let (lo, hi) = bracket(x, precision);
    if node.left() <= lo && hi <= node.right() {
        Membership::In
    } else if hi < node.left() || lo > node.right() {
        Membership::Out
    } else {
        Membership::Unknown
    }
}

/// The nodes of `O_r` or `C_r` at levels `l0..=l1`.
///
/// Serialized as a header line `kind=<O|C> r=<num>/<den> levels=<l0>..<l1>`
/// followed by one `(k,n)` line per node in `(n, k)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTruncation {
    kind: Kind,
    witness: Rational,
    levels: (i64, i64),
    nodes: BTreeSet<Node>,
}

/// Builds the truncation of the ideal of `r` over levels `l0..=l1`.
///
/// # Panics
///
/// If `l0 > l1`.
pub fn truncate_ideal(kind: Kind, r: &Rational, l0: i64, l1: i64) -> IdealTruncation {
    assert!(l0 <= l1, "empty level window {l0}..{l1}");
    let slice = match kind {
        Kind::O => o_slice,
        Kind::C => c_slice,
    };
    let nodes = (l0..=l1).flat_map(|l| slice(r, l)).collect();
    IdealTruncation { kind, witness: r.clone(), levels: (l0, l1), nodes }
}

impl IdealTruncation {
    /// A truncation with arbitrary nodes, for checking sets that are not
    /// known to be ideals. Nodes outside the window are dropped.
    pub fn from_parts(kind: Kind, witness: Rational, levels: (i64, i64), nodes: BTreeSet<Node>) -> Self {
        let nodes = nodes
            .into_iter()
            .filter(|n| (levels.0..=levels.1).contains(&n.level()))
            .collect();
        IdealTruncation { kind, witness, levels, nodes }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn witness(&self) -> &Rational {
        &self.witness
    }

    pub fn levels(&self) -> (i64, i64) {
        self.levels
    }

    pub fn nodes(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: &Node) -> bool {
        self.nodes.contains(node)
    }

    pub fn in_window(&self, level: i64) -> bool {
        (self.levels.0..=self.levels.1).contains(&level)
    }

    /// The nodes at `level`, in increasing `k`.
    pub fn level(&self, level: i64) -> Vec<&Node> {
        self.nodes.iter().filter(|n| n.level() == level).collect()
    }

    pub fn by_level(&self) -> BTreeMap<i64, Vec<&Node>> {
        let mut map: BTreeMap<i64, Vec<&Node>> = BTreeMap::new();
        for node in &self.nodes {
            map.entry(node.level()).or_default().push(node);
        }
        map
    }

    /// A copy with `node` removed.
    pub fn without(&self, node: &Node) -> IdealTruncation {
        let mut copy = self.clone();
        copy.nodes.remove(node);
        copy
    }

    /// A copy with `node` added (if it lies in the window).
    pub fn with(&self, node: Node) -> IdealTruncation {
        let mut copy = self.clone();
        if copy.in_window(node.level()) {
            copy.nodes.insert(node);
        }
        copy
    }
}

impl fmt::Display for IdealTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind={} r={} levels={}..{}",
            self.kind,
            Fraction(&self.witness),
            self.levels.0,
            self.levels.1
        )?;
        for node in &self.nodes {
            write!(f, "\n{node}")?;
        }
        Ok(())
    }
}

impl FromStr for IdealTruncation {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<IdealTruncation, ParseError> {
        let mut lines = text.split_inclusive('\n');
        let header = lines.next().unwrap_or("").trim_end_matches(['\n', '\r']);
        let mut fields = Vec::new();
        let mut at = 0;
        for token in header.split(' ') {
            fields.push((at, token));
            at += token.len() + 1;
        }
        let field = |index: usize, key: &str| -> Result<(usize, &str), ParseError> {
            let (at, token) = fields.get(index).copied().unwrap_or((header.len(), ""));
            let value = token
                .strip_prefix(key)
                .ok_or_else(|| ParseError::new(at, format!("expected '{key}'")))?;
            Ok((at + key.len(), value))
        };
        let (kind_at, kind) = field(0, "kind=")?;
        let kind = match kind {
            "O" => Kind::O,
            "C" => Kind::C,
            _ => return Err(ParseError::new(kind_at, "expected 'O' or 'C'")),
        };
        let (r_at, r) = field(1, "r=")?;
        let witness = parse_rational(r).map_err(|e| ParseError::new(r_at + e.offset, e.message))?;
        let (levels_at, levels) = field(2, "levels=")?;
        if let Some(&(extra, _)) = fields.get(3) {
            return Err(ParseError::new(extra, "unexpected trailing field"));
        }
        let (low, high) = levels
            .split_once("..")
            .ok_or_else(|| ParseError::new(levels_at, "expected '<l0>..<l1>'"))?;
        let l0: i64 = low.parse().map_err(|_| ParseError::new(levels_at, "expected an integer"))?;
        let l1: i64 = high
            .parse()
            .map_err(|_| ParseError::new(levels_at + low.len() + 2, "expected an integer"))?;
        if l0 > l1 {
            return Err(ParseError::new(levels_at, "empty level window"));
        }
        let mut offset = header.len() + 1;
        let mut nodes = BTreeSet::new();
        for line in lines {
            let body = line.trim_end_matches(['\n', '\r']);
            if !body.is_empty() {
                let node: Node = body.parse().map_err(|e: ParseError| ParseError::new(offset + e.offset, e.message))?;
                if !(l0..=l1).contains(&node.level()) {
                    return Err(ParseError::new(offset, "node level outside the window"));
                }
                nodes.insert(node);
            }
            offset += line.len();
        }
        Ok(IdealTruncation { kind, witness, levels: (l0, l1), nodes })
    }
}
