//! Executable closure conditions for truncated c-ideals and o-ideals.

use std::fmt;

use crate::dyadic::{Node, Role};

use super::IdealTruncation;

/// Result of one c-ideal condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub number: u8,
    pub holds: bool,
    /// A node at which the condition fails, or a remark on how it was read.
    pub detail: Option<String>,
}

impl PropertyOutcome {
    fn checked(number: u8, failure: Option<Node>) -> PropertyOutcome {
        PropertyOutcome {
            number,
            holds: failure.is_none(),
            detail: failure.map(|node| format!("at {node}")),
        }
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "PASS" } else { "FAIL" };
        write!(f, "property {}: {verdict}", self.number)?;
        if let Some(detail) = &self.detail {
            write!(f, " ({detail})")?;
        }
        Ok(())
    }
}

/// The six c-ideal conditions evaluated on a truncation. Displays as six
/// lines, one per condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPropertyReport {
    pub depth_bound: u32,
    pub properties: [PropertyOutcome; 6],
}

impl CPropertyReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.holds)
    }

    /// Whether condition `number` (1 to 6) holds.
    pub fn holds(&self, number: usize) -> bool {
        self.properties[number - 1].holds
    }
}

impl fmt::Display for CPropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, property) in self.properties.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{property}")?;
        }
        Ok(())
    }
}

/// Checks the six c-ideal conditions on the window `l0..=l1` of `t`.
///
/// 1. every node below `l1` has a child in `t`;
/// 2. the nodes at each level are adjacent and at most three;
/// 3. stability under double negation, which holds by construction since
///    membership is decidable;
/// 4. for each node below `l1`, `λI` or `ρI` is in `t`, and each node at
///    `l1` has a neighbour in `t` (as `λI` or `ρI` would force);
/// 5. bounded: at levels `n <= l1 - depth_bound`, if `ρ^i I` is in `t` for
///    `1 <= i <= depth_bound` then `I` is the leftmost of three adjacent
///    nodes of `t`, and conversely a leftmost-of-three node has its whole
///    `ρ` chain up to `l1` in `t`; mirrored for `λ` and rightmost;
/// 6. every join of two nodes of `t` that lands in the window is in `t`,
///    and every parent of a node above `l0` is in `t` (a c-ideal is a
///    downset).
///
/// The forward half of condition 5 is exact for rationals whose denominator
/// is below `2^(depth_bound - 1)`: a longer `ρ` chain than that can only
/// come from an endpoint.
pub fn check_c_properties(t: &IdealTruncation, depth_bound: u32) -> CPropertyReport {
    let (l0, l1) = t.levels();
    let below_top = |n: &&Node| n.level() < l1;

    let p1 = t
        .nodes()
        .iter()
        .filter(below_top)
        .find(|n| !n.children().iter().any(|c| t.contains(c)))
        .cloned();

    let p2 = t.by_level().into_iter().find_map(|(_, nodes)| {
        let adjacent = nodes.windows(2).all(|w| w[1].k() - w[0].k() == 1.into());
        (!adjacent || nodes.len() > 3).then(|| nodes[0].clone())
    });

    let p3 = PropertyOutcome {
        number: 3,
        holds: true,
        detail: Some("membership is decidable".to_string()),
    };

    // At `l1` the children are out of view, but either one forces a
    // neighbour of its parent into a downset.
    let p4 = t
        .nodes()
        .iter()
        .find(|n| {
            if n.level() < l1 {
                !t.contains(&n.child(Role::Left)) && !t.contains(&n.child(Role::Right))
            } else {
                !t.contains(&n.shifted(-1)) && !t.contains(&n.shifted(1))
            }
        })
        .cloned();

    let p5 = property_five(t, depth_bound);

    let nodes: Vec<&Node> = t.nodes().iter().collect();
    let missing_join = nodes.iter().enumerate().find_map(|(i, a)| {
        nodes[i + 1..].iter().find_map(|b| {
            let join = a.join(b)?;
            (t.in_window(join.level()) && !t.contains(&join)).then_some(join)
        })
    });
    let missing_parent = t
        .nodes()
        .iter()
        .filter(|n| n.level() > l0)
        .flat_map(|n| n.parents())
        .map(|(parent, _)| parent)
        .find(|parent| !t.contains(parent));
    let p6 = missing_join.or(missing_parent);

    let mut p5 = PropertyOutcome::checked(5, p5);
    p5.detail.get_or_insert_with(|| format!("depth bound {depth_bound}"));

    CPropertyReport {
        depth_bound,
        properties: [
            PropertyOutcome::checked(1, p1),
            PropertyOutcome::checked(2, p2),
            p3,
            PropertyOutcome::checked(4, p4),
            p5,
            PropertyOutcome::checked(6, p6),
        ],
    }
}

fn property_five(t: &IdealTruncation, depth_bound: u32) -> Option<Node> {
    let (_, l1) = t.levels();
    for node in t.nodes() {
        let n = node.level();
        for (role, toward) in [(Role::Right, 1i64), (Role::Left, -1)] {
            let extreme = |i: u32| match role {
                Role::Right => node.rightmost_descendant(i),
                _ => node.leftmost_descendant(i),
            };
            let end_of_three = t.contains(&node.shifted(toward)) && t.contains(&node.shifted(2 * toward));
            if n + i64::from(depth_bound) <= l1 {
                let chain = (1..=depth_bound).all(|i| t.contains(&extreme(i)));
                if chain && !end_of_three {
                    return Some(node.clone());
                }
            }
            if end_of_three {
                let reach = (l1 - n).max(0) as u32;
                if !(1..=reach).all(|i| t.contains(&extreme(i))) {
                    return Some(node.clone());
                }
            }
        }
    }
    None
}

/// The first o-ideal condition found to fail on a truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OIdealViolation {
    Empty,
    /// A node above the bottom level with a parent outside the set.
    NotDownwardClosed { node: Node, parent: Node },
    /// Two nodes whose join lies in the window but not in the set.
    MissingJoin { a: Node, b: Node, join: Node },
    /// A node with no nonextreme descendant within the lookahead.
    NoNonextremeDescendant(Node),
}

impl fmt::Display for OIdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OIdealViolation::Empty => write!(f, "empty set"),
            OIdealViolation::NotDownwardClosed { node, parent } => {
                write!(f, "{node} is present but its parent {parent} is not")
            }
            OIdealViolation::MissingJoin { a, b, join } => {
                write!(f, "the join {join} of {a} and {b} is missing")
            }
            OIdealViolation::NoNonextremeDescendant(node) => {
                write!(f, "{node} has no nonextreme descendant")
            }
        }
    }
}

/// [`check_o_ideal_with`] using half the window height as lookahead.
pub fn check_o_ideal(t: &IdealTruncation) -> bool {
    let (l0, l1) = t.levels();
    check_o_ideal_with(t, ((l1 - l0) / 2).max(1) as u32)
}

/// Downward closure above `l0`, closure under joins landing in the window,
/// and a nonextreme descendant in `t` for every node at a level
/// `n <= l1 - lookahead`.
pub fn check_o_ideal_with(t: &IdealTruncation, lookahead: u32) -> bool {
    o_ideal_violation(t, lookahead).is_none()
}

pub fn o_ideal_violation(t: &IdealTruncation, lookahead: u32) -> Option<OIdealViolation> {
    let (l0, l1) = t.levels();
    if t.is_empty() {
        return Some(OIdealViolation::Empty);
    }
    for node in t.nodes().iter().filter(|n| n.level() > l0) {
        if let Some((parent, _)) = node.parents().into_iter().find(|(p, _)| !t.contains(p)) {
            return Some(OIdealViolation::NotDownwardClosed { node: node.clone(), parent });
        }
    }
    let nodes: Vec<&Node> = t.nodes().iter().collect();
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            if let Some(join) = a.join(b) {
                if t.in_window(join.level()) && !t.contains(&join) {
                    return Some(OIdealViolation::MissingJoin { a: (*a).clone(), b: (*b).clone(), join });
                }
            }
        }
    }
    for node in t.nodes().iter().filter(|n| n.level() + i64::from(lookahead) <= l1) {
        let found = t
            .nodes()
            .iter()
            .any(|d| d.level() > node.level() && node.contains(d) && !d.is_extreme_descendant_of(node));
        if !found {
            return Some(OIdealViolation::NoNonextremeDescendant(node.clone()));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{truncate_ideal, Kind};
    use crate::rational::{int, ratio};

    #[test]
    fn c_ideals_pass() {
        let zero = truncate_ideal(Kind::C, &int(0), 1, 12);
        let report = check_c_properties(&zero, 6);
        assert!(report.all_pass(), "{report}");
        let third = truncate_ideal(Kind::C, &ratio(1, 3), 1, 12);
        assert!(check_c_properties(&third, 6).all_pass());
        let eighth = truncate_ideal(Kind::C, &ratio(-3, 8), 0, 12);
        assert!(check_c_properties(&eighth, 6).all_pass());
    }

    #[test]
    fn report_format() {
        let zero = truncate_ideal(Kind::C, &int(0), 1, 6);
        let expected = "property 1: PASS\nproperty 2: PASS\n\
                        property 3: PASS (membership is decidable)\nproperty 4: PASS\n\
                        property 5: PASS (depth bound 3)\nproperty 6: PASS";
        assert_eq!(check_c_properties(&zero, 3).to_string(), expected);
    }

    #[test]
    fn c_deletions_are_detected() {
        for r in [int(0), ratio(1, 3), ratio(5, 16), ratio(-7, 9)] {
            let t = truncate_ideal(Kind::C, &r, 1, 12);
            for node in t.nodes().iter().filter(|n| n.level() > 1 && n.level() < 12) {
                let report = check_c_properties(&t.without(node), 6);
                assert!(!report.all_pass(), "deleting {node} from C_{r} went unnoticed");
            }
        }
    }

    #[test]
    fn short_chains_mimic_endpoints() {
        // 1/3 has odd denominator 3, so chains of length >= 3 are decisive;
        // a single ρ step is not.
        let t = truncate_ideal(Kind::C, &ratio(1, 3), 1, 12);
        assert!(!check_c_properties(&t, 1).holds(5));
        for bound in 3..=6 {
            assert!(check_c_properties(&t, bound).holds(5), "bound {bound}");
        }
    }

    #[test]
    fn o_ideals() {
        assert!(check_o_ideal(&truncate_ideal(Kind::O, &ratio(1, 3), 1, 12)));
        assert!(check_o_ideal(&truncate_ideal(Kind::O, &int(0), 1, 12)));
        let t = truncate_ideal(Kind::O, &ratio(1, 3), 1, 12);
        let join = Node::new(0, 2).join(&Node::new(1, 2)).unwrap();
        assert_eq!(join, Node::new(2, 3));
        let broken = t.without(&join);
        assert!(!check_o_ideal(&broken));
        assert!(!check_o_ideal(&truncate_ideal(Kind::C, &int(0), 1, 12)));
    }

    #[test]
    fn o_ideal_requires_nonextreme_descendants() {
        // A lone λ-chain is a downset closed under joins but every member's
        // descendants are extreme.
        let chain = (1..=8).map(|i| Node::new(0, 0).leftmost_descendant(i));
        let mut t = IdealTruncation::from_parts(Kind::O, int(0), (1, 8), chain.collect());
        t = t.with(Node::new(0, 1));
        assert!(matches!(
            o_ideal_violation(&t, 2),
            Some(OIdealViolation::NoNonextremeDescendant(_)) | Some(OIdealViolation::NotDownwardClosed { .. })
        ));
    }
}
