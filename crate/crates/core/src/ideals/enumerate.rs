//! Counting the part of `O_r` at and beyond a given node's level, for a
//! real `r` given by a sequence `c` with `|c_m - r| <= 1/m`.
//!
//! The nodes counted are the siblings of `J` (the children of its parents)
//! and their descendants. They are scheduled in rounds: round `t` lists, in
//! order of level and then `k`, every node within `t - 1` levels of `J`. A
//! node at `d` levels beyond `J` therefore occurs in round `d + 1` and in
//! every later one. Step `i` yields the scheduled node `J_i` when the closed
//! interval `[c_i - 1/i, c_i + 1/i]` lies inside it, and nothing otherwise.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::dyadic::Node;
use crate::rational::{ratio, Rational};
use crate::sequences::RationalSequence;

/// The defined values of the counting among its first `steps` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub roots: Vec<Node>,
    pub steps: u64,
    pub values: BTreeMap<u64, Node>,
}

impl Enumeration {
    /// The distinct nodes reached.
    pub fn nodes(&self) -> BTreeSet<Node> {
        self.values.values().cloned().collect()
    }
}

/// [`o_enumerate_with`] for the constant sequence `c_m = r`.
///
/// # Panics
///
/// If `r` is not in the open interval of `j`.
pub fn o_enumerate(r: &Rational, j: &Node, steps: u64) -> Enumeration {
    assert!(j.contains_point(r), "{j} does not contain the point");
    let r = r.clone();
    o_enumerate_with(&RationalSequence::new(move |_| r.clone()), j, steps)
}

/// The counting of `O_r` beyond `j`, where `|c_m - r| <= 1/m` for all `m`.
pub fn o_enumerate_with(c: &RationalSequence, j: &Node, steps: u64) -> Enumeration {
    let roots: Vec<Node> = {
        let mut siblings = BTreeSet::new();
        for (parent, _) in j.parents() {
            siblings.extend(parent.children());
        }
        siblings.into_iter().collect()
    };
    let low = roots.first().expect("a node has siblings").k().clone();
    let high = roots.last().expect("a node has siblings").k() + 2;
    let base = j.level();

    let mut values = BTreeMap::new();
    let mut step = 0u64;
    'rounds: for round in 1u32.. {
        for depth in 0..round {
            let shift = depth;
            let first = &low << shift;
            let last: BigInt = (&high << shift) - 2;
            let mut k = first;
            while k <= last {
                if step == steps {
                    break 'rounds;
                }
                step += 1;
                let node = Node::new(k.clone(), base + i64::from(depth));
                if roots.iter().any(|root| root.contains(&node)) && guard(c, step, &node) {
                    values.insert(step, node);
                }
                k += 1;
            }
        }
    }
    Enumeration { roots, steps, values }
}

fn guard(c: &RationalSequence, i: u64, node: &Node) -> bool {
    let centre = c.term(i);
    let slack = ratio(1, i as i64);
    node.left() < &centre - &slack && &centre + &slack < node.right()
}
