//! Cauchy subsets: downsets of the pseudotree that reach every level and
//! whose nodes crowd together.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::dyadic::Node;
use crate::rational::{floor, mul_pow2, pow2, Rational};
use crate::sequences::{Modulus, RationalSequence};

use super::IdealTruncation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CauchyError {
    #[error("no convergence level is declared for precision {0}")]
    Undeclared(i64),
    #[error("no node lies beyond level {level}, the convergence level for precision {precision}")]
    NothingBeyond { precision: i64, level: i64 },
}

/// A finite piece of a Cauchy subset.
///
/// `modulus` maps a precision `p` to a level `l(p)` such that any two nodes
/// `(j,s)`, `(k,t)` with `s, t > l(p)` have `|j/2^s - k/2^t| < 2^-p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchySubset {
    pub nodes: BTreeSet<Node>,
    pub max_level: i64,
    pub modulus: BTreeMap<i64, i64>,
}

impl CauchySubset {
    pub fn new(nodes: BTreeSet<Node>, max_level: i64, modulus: BTreeMap<i64, i64>) -> CauchySubset {
        CauchySubset { nodes, max_level, modulus }
    }

    /// Reads a truncation as a Cauchy subset, declaring `l(p) = level(p)`
    /// for every `p >= 0` with `level(p) < max_level`.
    pub fn from_truncation(t: &IdealTruncation, level: impl Fn(i64) -> i64) -> CauchySubset {
        let max_level = t.levels().1;
        let modulus = (0..=max_level.max(0))
            .map(|p| (p, level(p)))
            .filter(|&(_, l)| l < max_level)
            .collect();
        CauchySubset { nodes: t.nodes().clone(), max_level, modulus }
    }

    /// Lowest level present.
    pub fn base_level(&self) -> Option<i64> {
        self.nodes.first().map(Node::level)
    }

    pub fn contains(&self, node: &Node) -> bool {
        self.nodes.contains(node)
    }

    /// The nodes beyond `level`, least level first.
    fn beyond(&self, level: i64) -> impl Iterator<Item = &Node> {
        self.nodes.iter().filter(move |n| n.level() > level)
    }
}

/// Downward closure above the base level, a node at every level from the
/// base to `max_level`, and the convergence clause for every declared
/// precision.
pub fn cauchy_check(s: &CauchySubset) -> bool {
    let Some(base) = s.base_level() else {
        return false;
    };
    let closed = s
        .nodes
        .iter()
        .filter(|n| n.level() > base)
        .all(|n| n.parents().iter().all(|(p, _)| s.contains(p)));
    let levels: BTreeSet<i64> = s.nodes.iter().map(Node::level).collect();
    let unbounded = (base..=s.max_level).all(|l| levels.contains(&l));
    let converges = s.modulus.iter().all(|(&p, &l)| {
        // The widest pair is the least and the greatest left endpoint.
        let lefts: Vec<Rational> = s.beyond(l).map(Node::left).collect();
        match (lefts.iter().min(), lefts.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo < pow2(-p),
            _ => true,
        }
    });
    closed && unbounded && converges
}

/// Every node below `max_level` has a child in the set.
pub fn is_unblocked(s: &CauchySubset) -> bool {
    s.nodes
        .iter()
        .filter(|n| n.level() < s.max_level)
        .all(|n| n.children().iter().any(|c| s.contains(c)))
}

/// The closed interval of radius `2^-p + 2^-l(p)` about `(j+1)/2^s`, where
/// `(j, s)` is the first node beyond `l(p)`. The limit of the set lies in it.
pub fn limit_bounds(s: &CauchySubset, p: i64) -> Result<(Rational, Rational), CauchyError> {
    let &level = s.modulus.get(&p).ok_or(CauchyError::Undeclared(p))?;
    let node = s
        .beyond(level)
        .next()
        .ok_or(CauchyError::NothingBeyond { precision: p, level })?;
    let centre = node.midpoint();
    let radius = pow2(-p) + pow2(-level);
    Ok((&centre - &radius, centre + radius))
}

/// The downset generated by `J_n = (floor(c_n 2^n), n)` for `n = 1..=depth`,
/// restricted to levels `>= 1`.
///
/// Given a modulus `mu` for `c`, declares `l(p) = max(mu(2^(p+3)) - 1, p + 3)`
/// for every `p >= 0` with `l(p) < depth`: nodes beyond that level have left
/// endpoints within `3 2^-(l+1)` of terms `c_n` with `n >= mu(2^(p+3))`,
/// which lie within `2^-(p+2)` of each other.
pub fn cauchy_from_sequence(c: &RationalSequence, depth: i64, mu: Option<&Modulus>) -> CauchySubset {
    assert!(depth >= 1, "depth must be positive");
    let mut nodes = BTreeSet::new();
    let mut frontier: Vec<Node> = (1..=depth)
        .map(|n| Node::new(floor(&mul_pow2(&c.term(n as u64), n)), n))
        .collect();
    while let Some(node) = frontier.pop() {
        if node.level() >= 1 && nodes.insert(node.clone()) {
            frontier.extend(node.parents().into_iter().map(|(p, _)| p));
        }
    }
    let modulus = match mu {
        Some(mu) => (0..depth)
            .map_while(|p| {
                let index = 1u64.checked_shl(u32::try_from(p + 3).ok()?)?;
                let level = (mu.at(index) as i64 - 1).max(p + 3);
                (level < depth).then_some((p, level))
            })
            .collect(),
        None => BTreeMap::new(),
    };
    CauchySubset { nodes, max_level: depth, modulus }
}

/// The distance from `r` to the closed interval of `node`.
pub fn closure_distance(node: &Node, r: &Rational) -> Rational {
    let (l, h) = (node.left(), node.right());
    if r < &l {
        l - r
    } else if r > &h {
        r - h
    } else {
        Rational::from_integer(BigInt::from(0))
    }
}
