//! The Riesz space `Q^d` and its signed-bit representations.
//!
//! Elements are rational vectors under the pointwise order, with the
//! all-ones vector as unit. `Pos(a)` holds when some rational `q > 0` lies
//! below every upper bound of `a`; here that is exactly when the greatest
//! coordinate is positive.
//!
//! For a finite set `X` of elements (indexed by position), a
//! [`ChiAssignment`] maps some of the indices to pseudotree nodes. The
//! signed-bit representation `X_T` consists of the assignments `I` with
//! `Pos(wedge over y of (y - inf I_y) ∧ (sup I_y - y))`: some coordinate of
//! every assigned element falls inside its node, all at the same coordinate.
//!
//! Coordinate projections are the Riesz homomorphisms into the reals. A
//! projection induces the o-ideals `x -> O_{x_j}`, and every choice of one
//! node per element from those ideals lies in `X_T`
//! ([`induced_family`]). Conversely, midpoints of deep nodes of a family
//! read back a map that satisfies the homomorphism laws up to the width of
//! the nodes ([`reconstruct_hom`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::dyadic::Node;
use crate::ideals::{o_slice, truncate_ideal, IdealTruncation, Kind};
use crate::rational::{parse_rational, pow2, Fraction, Rational};
use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RieszError {
    #[error("dimension mismatch: {left} against {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{elements} elements but {truncations} truncations")]
    FamilyMismatch { elements: usize, truncations: usize },
    #[error("truncation of element {element} stops at level {level}, too shallow for eps = {eps}")]
    TooShallow { element: usize, level: i64, eps: String },
}

/// A vector in `Q^d`, `d >= 1`. Text form `[q1,q2,...,qd]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RieszElement {
    coords: Vec<Rational>,
}

impl RieszElement {
    /// # Panics
    ///
    /// If `coords` is empty.
    pub fn new(coords: Vec<Rational>) -> RieszElement {
        assert!(!coords.is_empty(), "a Riesz element needs at least one coordinate");
        RieszElement { coords }
    }

    pub fn constant(dim: usize, value: Rational) -> RieszElement {
        RieszElement::new(vec![value; dim])
    }

    pub fn unit(dim: usize) -> RieszElement {
        RieszElement::constant(dim, Rational::one())
    }

    pub fn zero(dim: usize) -> RieszElement {
        RieszElement::constant(dim, Rational::zero())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The value of the projection onto coordinate `j` (0-based).
    pub fn coord(&self, j: usize) -> &Rational {
        &self.coords[j]
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> RieszElement {
        RieszElement { coords: self.coords.iter().map(f).collect() }
    }

    fn zip(&self, other: &RieszElement, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<RieszElement, RieszError> {
        if self.dim() != other.dim() {
            return Err(RieszError::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect();
        Ok(RieszElement { coords })
    }
}

impl fmt::Display for RieszElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, q) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", Fraction(q))?;
        }
        f.write_str("]")
    }
}

impl FromStr for RieszElement {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<RieszElement, ParseError> {
        let inner = text.strip_prefix('[').ok_or_else(|| ParseError::new(0, "expected '['"))?;
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| ParseError::new(text.len(), "expected ']'"))?;
        let mut coords = Vec::new();
        let mut at = 1;
        for piece in inner.split(',') {
            let q = parse_rational(piece).map_err(|e| ParseError::new(at + e.offset, e.message))?;
            coords.push(q);
            at += piece.len() + 1;
        }
        Ok(RieszElement { coords })
    }
}

pub fn vee(x: &RieszElement, y: &RieszElement) -> Result<RieszElement, RieszError> {
    x.zip(y, |a, b| a.max(b).clone())
}

pub fn wedge(x: &RieszElement, y: &RieszElement) -> Result<RieszElement, RieszError> {
    x.zip(y, |a, b| a.min(b).clone())
}

pub fn plus(x: &RieszElement, y: &RieszElement) -> Result<RieszElement, RieszError> {
    x.zip(y, |a, b| a + b)
}

pub fn minus(x: &RieszElement, y: &RieszElement) -> Result<RieszElement, RieszError> {
    x.zip(y, |a, b| a - b)
}

pub fn negate(x: &RieszElement) -> RieszElement {
    x.map(|a| -a)
}

pub fn scale(q: &Rational, x: &RieszElement) -> RieszElement {
    x.map(|a| q * a)
}

/// `x ∨ 0`.
pub fn pos_part(x: &RieszElement) -> RieszElement {
    x.map(|a| a.max(&Rational::zero()).clone())
}

/// `(-x) ∨ 0`.
pub fn neg_part(x: &RieszElement) -> RieszElement {
    x.map(|a| (-a).max(Rational::zero()))
}

/// `x⁺ + x⁻`.
pub fn abs_val(x: &RieszElement) -> RieszElement {
    x.map(Signed::abs)
}

/// The pointwise order.
pub fn le(x: &RieszElement, y: &RieszElement) -> Result<bool, RieszError> {
    if x.dim() != y.dim() {
        return Err(RieszError::DimensionMismatch { left: x.dim(), right: y.dim() });
    }
    Ok(x.coords.iter().zip(&y.coords).all(|(a, b)| a <= b))
}

/// The infimum of `U(a) = {q : a < q}`, which is the greatest coordinate.
pub fn sup_cut(a: &RieszElement) -> Rational {
    a.coords.iter().max().expect("nonempty").clone()
}

/// `0 < U(a)`.
pub fn pos(a: &RieszElement) -> bool {
    sup_cut(a).is_positive()
}

/// `sup |a|`, a norm on `Q^d`.
pub fn seminorm(a: &RieszElement) -> Rational {
    sup_cut(&abs_val(a))
}

/// `(a - p) ∧ (q - a)` for the interval `(p, q)` of `node`.
pub fn elem_in_interval(a: &RieszElement, node: &Node) -> RieszElement {
    let (p, q) = (node.left(), node.right());
    a.map(|x| (x - &p).min(&q - x))
}

/// Finitely many elements of `X`, by index, each sent to a node.
pub type ChiAssignment = BTreeMap<usize, Node>;

fn chi_wedge(x: &[RieszElement], assignment: &ChiAssignment) -> Option<RieszElement> {
    assignment
        .iter()
        .map(|(&y, node)| elem_in_interval(&x[y], node))
        .reduce(|a, b| wedge(&a, &b).expect("elements of X share a dimension"))
}

/// Membership in `X_T`. The empty assignment is a member.
///
/// # Panics
///
/// If an index is out of range for `x` or the elements differ in dimension.
pub fn chi_member(x: &[RieszElement], assignment: &ChiAssignment) -> bool {
    chi_wedge(x, assignment).is_none_or(|w| pos(&w))
}

/// Checks that the domains of `chi` cover `0..x_len` and that `chi` is
/// closed downwards: under dropping an entry, and under replacing a node by
/// one of its parents no lower than the lowest level used anywhere in `chi`.
pub fn well_formed_check(chi: &BTreeSet<ChiAssignment>, x_len: usize) -> bool {
    let covered: BTreeSet<usize> = chi.iter().flat_map(|i| i.keys().copied()).collect();
    if covered != (0..x_len).collect() {
        return false;
    }
    let floor = chi.iter().flat_map(|i| i.values().map(Node::level)).min();
    chi.iter().all(|assignment| {
        assignment.iter().all(|(y, node)| {
            let mut dropped = assignment.clone();
            dropped.remove(y);
            let parents_ok = node
                .parents()
                .into_iter()
                .filter(|(p, _)| Some(p.level()) >= floor)
                .all(|(p, _)| {
                    let mut widened = assignment.clone();
                    widened.insert(*y, p);
                    chi.contains(&widened)
                });
            chi.contains(&dropped) && parents_ok
        })
    })
}

/// Every assignment obtained from those in `seeds` by dropping entries and
/// widening nodes to ancestors at levels `>= floor`.
pub fn downward_closure(seeds: &BTreeSet<ChiAssignment>, floor: i64) -> BTreeSet<ChiAssignment> {
    let mut closed = BTreeSet::new();
    let mut frontier: Vec<ChiAssignment> = seeds.iter().cloned().collect();
    while let Some(assignment) = frontier.pop() {
        if !closed.insert(assignment.clone()) {
            continue;
        }
        for (y, node) in &assignment {
            let mut dropped = assignment.clone();
            dropped.remove(y);
            frontier.push(dropped);
            for (parent, _) in node.parents() {
                if parent.level() >= floor {
                    let mut widened = assignment.clone();
                    widened.insert(*y, parent);
                    frontier.push(widened);
                }
            }
        }
    }
    closed
}

/// Searches for `J` in `X_T` extending `assignment` with `u` in its domain
/// and `J_u` at level `>= n`.
///
/// Other entries are kept, and `J_u` is sought at level `max(n, level(I_u))`
/// (or `n` when `u` is unassigned) among the nodes containing some
/// coordinate of `x[u]` and, if `u` is assigned, lying inside `I_u`. Over
/// `Q^d` the search is complete: any extension shrinks to one of this form.
/// Returns `None` when `assignment` is not in `X_T` or no extension exists.
pub fn extendible_check(x: &[RieszElement], assignment: &ChiAssignment, u: usize, n: i64) -> Option<ChiAssignment> {
    if !chi_member(x, assignment) {
        return None;
    }
    let current = assignment.get(&u);
    let level = current.map_or(n, |node| node.level().max(n));
    let mut candidates = BTreeSet::new();
    for value in x[u].coords() {
        for node in o_slice(value, level) {
            if current.is_none_or(|c| c.contains(&node)) {
                candidates.insert(node);
            }
        }
    }
    candidates.into_iter().find_map(|node| {
        let mut extended = assignment.clone();
        extended.insert(u, node);
        chi_member(x, &extended).then_some(extended)
    })
}

/// The o-ideals induced by projection onto coordinate `coordinate`
/// (0-based): the O-truncation of `x_j` over levels `1..=depth` for each
/// element, in the order of `x`.
pub fn induced_family(coordinate: usize, x: &[RieszElement], depth: i64) -> Vec<IdealTruncation> {
    x.iter()
        .map(|element| truncate_ideal(Kind::O, element.coord(coordinate), 1, depth))
        .collect()
}

/// Which law a [`HomCheck`] tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Law {
    Additivity,
    Unit,
    Wedge,
    Scale,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Additivity => "additivity",
            Law::Unit => "unit",
            Law::Wedge => "wedge",
            Law::Scale => "scale",
        })
    }
}

/// One instance of a homomorphism law evaluated on read-back values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCheck {
    pub law: Law,
    /// Human-readable operands, e.g. `x0,x3` or `q=3/2 x1`.
    pub subject: String,
    /// `None` when an element the law needs is not in `X`.
    pub deviation: Option<Rational>,
    pub bound: Rational,
    /// The deepest nodes used, labelled, for diagnosing failures.
    pub intervals: Vec<(String, Node)>,
}

impl HomCheck {
    pub fn holds(&self) -> bool {
        self.deviation.as_ref().is_some_and(|d| *d <= self.bound)
    }
}

impl fmt::Display for HomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: ", self.law, self.subject)?;
        match &self.deviation {
            None => write!(f, "UNAVAILABLE (element not in X)"),
            Some(d) => {
                let verdict = if self.holds() { "PASS" } else { "FAIL" };
                write!(f, "{verdict} deviation={} bound={}", Fraction(d), Fraction(&self.bound))?;
                if !self.holds() {
                    for (label, node) in &self.intervals {
                        write!(f, " {label}={node}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// The outcome of [`reconstruct_hom`], one line per check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomReport {
    pub eps: Rational,
    pub checks: Vec<HomCheck>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(HomCheck::holds)
    }

    pub fn passed_law(&self, law: Law) -> bool {
        self.checks.iter().filter(|c| c.law == law).all(HomCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HomCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

impl fmt::Display for HomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, check) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{check}")?;
        }
        Ok(())
    }
}

/// The deepest node of a truncation, least `k` first.
fn deepest(t: &IdealTruncation) -> Option<&Node> {
    let top = t.nodes().last()?.level();
    t.nodes().iter().find(|n| n.level() == top)
}

/// Reads `f(x)` off `family` as the midpoint of the deepest node for `x`,
/// then checks the homomorphism laws on the elements of `x` that the laws
/// need: `x_a + x_b` and `x_a ∧ x_b` for each probe `(a, b)`, the unit, and
/// `q x_a` for each probe and each scalar `q`. Elements are found in `x` by
/// value.
///
/// Additivity and the wedge law are held to `eps`, the unit to `eps`, and
/// `f(q x) = q f(x)` to `eps (1 + |q|)`. Every truncation must reach a level
/// `n` with `2^-n < eps/4`.
pub fn reconstruct_hom(
    x: &[RieszElement],
    family: &[IdealTruncation],
    probes: &[(usize, usize)],
    scalars: &[Rational],
    eps: &Rational,
) -> Result<HomReport, RieszError> {
    if x.len() != family.len() {
        return Err(RieszError::FamilyMismatch { elements: x.len(), truncations: family.len() });
    }
    let quarter = eps / Rational::from_integer(4.into());
    let mut nodes = Vec::with_capacity(x.len());
    for (element, t) in family.iter().enumerate() {
        let node = deepest(t).filter(|n| pow2(-n.level()) < quarter);
        let node = node.ok_or_else(|| RieszError::TooShallow {
            element,
            level: t.nodes().last().map_or(i64::MIN, Node::level),
            eps: Fraction(eps).to_string(),
        })?;
        nodes.push(node.clone());
    }
    let index: BTreeMap<&RieszElement, usize> = x.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let f = |i: usize| nodes[i].midpoint();
    let label = |i: usize| format!("x{i}");
    let find = |e: &RieszElement| index.get(e).copied();
    let check = |law, subject: String, deviation: Option<Rational>, bound: Rational, used: &[(String, usize)]| HomCheck {
        law,
        subject,
        deviation,
        bound,
        intervals: used.iter().map(|(l, i)| (l.clone(), nodes[*i].clone())).collect(),
    };

    let mut checks = Vec::new();
    for &(a, b) in probes {
        let subject = format!("{},{}", label(a), label(b));
        let sum = find(&plus(&x[a], &x[b])?);
        let deviation = sum.map(|s| (f(s) - f(a) - f(b)).abs());
        let mut used = vec![(label(a), a), (label(b), b)];
        used.extend(sum.map(|s| (format!("{}+{}", label(a), label(b)), s)));
        checks.push(check(Law::Additivity, subject, deviation, eps.clone(), &used));
    }
    let unit = find(&RieszElement::unit(x.first().map_or(1, RieszElement::dim)));
    let deviation = unit.map(|u| (f(u) - Rational::one()).abs());
    let used: Vec<_> = unit.map(|u| ("1".to_string(), u)).into_iter().collect();
    checks.push(check(Law::Unit, "1".to_string(), deviation, eps.clone(), &used));
    for &(a, b) in probes {
        let subject = format!("{},{}", label(a), label(b));
        let meet = find(&wedge(&x[a], &x[b])?);
        let deviation = meet.map(|m| (f(m) - f(a).min(f(b))).abs());
        let mut used = vec![(label(a), a), (label(b), b)];
        used.extend(meet.map(|m| (format!("{}^{}", label(a), label(b)), m)));
        checks.push(check(Law::Wedge, subject, deviation, eps.clone(), &used));
    }
    let scaled_subjects: BTreeSet<usize> = probes.iter().map(|&(a, _)| a).collect();
    for &a in &scaled_subjects {
        for q in scalars {
            let subject = format!("q={} {}", Fraction(q), label(a));
            let image = find(&scale(q, &x[a]));
            let deviation = image.map(|s| (f(s) - q * f(a)).abs());
            let bound = eps * (Rational::one() + q.abs());
            let mut used = vec![(label(a), a)];
            used.extend(image.map(|s| (format!("q{}", label(a)), s)));
            checks.push(check(Law::Scale, subject, deviation, bound, &used));
        }
    }
    Ok(HomReport { eps: eps.clone(), checks })
}

/// `x` together with every element [`reconstruct_hom`] looks up for the
/// given probes and scalars, original elements first and without
/// duplicates.
pub fn close_for_probes(x: &[RieszElement], probes: &[(usize, usize)], scalars: &[Rational]) -> Result<Vec<RieszElement>, RieszError> {
    let mut out: Vec<RieszElement> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |e: RieszElement| {
        if seen.insert(e.clone()) {
            out.push(e);
        }
    };
    for e in x {
        push(e.clone());
    }
    for &(a, b) in probes {
        push(plus(&x[a], &x[b])?);
        push(wedge(&x[a], &x[b])?);
        for q in scalars {
            push(scale(q, &x[a]));
        }
    }
    if let Some(first) = x.first() {
        push(RieszElement::unit(first.dim()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn el(coords: &[(i64, i64)]) -> RieszElement {
        RieszElement::new(coords.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn lattice_identities() {
        let x = el(&[(1, 1), (-2, 1)]);
        assert_eq!(pos_part(&x), el(&[(1, 1), (0, 1)]));
        assert_eq!(neg_part(&x), el(&[(0, 1), (2, 1)]));
        assert_eq!(abs_val(&x), el(&[(1, 1), (2, 1)]));
        assert_eq!(wedge(&x, &x).unwrap(), x);
        assert_eq!(minus(&pos_part(&x), &neg_part(&x)).unwrap(), x);
        assert_eq!(plus(&pos_part(&x), &neg_part(&x)).unwrap(), abs_val(&x));
        assert_eq!(vee(&x, &RieszElement::zero(2)).unwrap(), pos_part(&x));
        assert_eq!(
            plus(&x, &RieszElement::unit(3)),
            Err(RieszError::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn positivity() {
        let zero = RieszElement::zero(2);
        assert!(!pos(&zero));
        assert_eq!(seminorm(&zero), int(0));
        let a = el(&[(-1, 1), (1, 2)]);
        assert!(pos(&a));
        assert_eq!(seminorm(&a), int(1));
        let b = el(&[(-1, 1), (-2, 1)]);
        assert!(!pos(&b));
        assert_eq!(sup_cut(&b), int(-1));
    }

    #[test]
    fn intervals() {
        let a = el(&[(0, 1), (1, 1)]);
        let node = Node::new(-1, 1);
        assert_eq!(elem_in_interval(&a, &node), el(&[(1, 2), (-1, 2)]));
        assert!(pos(&elem_in_interval(&a, &node)));
        let far = el(&[(3, 1), (-5, 2)]);
        assert!(!pos(&elem_in_interval(&far, &node)));
    }

    #[test]
    fn membership() {
        let x = vec![el(&[(0, 1), (1, 1)]), el(&[(1, 1), (0, 1)])];
        let window = Node::new(-1, 1);
        assert!(chi_member(&x, &ChiAssignment::from([(0, window.clone())])));
        assert!(!chi_member(&x, &ChiAssignment::from([(0, window.clone()), (1, window)])));
        assert!(chi_member(&x, &ChiAssignment::new()));
    }

    #[test]
    fn well_formedness() {
        let x = vec![el(&[(0, 1), (1, 1)]), el(&[(1, 1), (0, 1)])];
        let seeds: BTreeSet<ChiAssignment> = [
            ChiAssignment::from([(0, Node::new(-1, 3)), (1, Node::new(7, 3))]),
            ChiAssignment::from([(0, Node::new(7, 3)), (1, Node::new(-1, 3))]),
        ]
        .into();
        let chi = downward_closure(&seeds, 1);
        assert!(well_formed_check(&chi, 2));
        assert!(chi.iter().all(|i| chi_member(&x, i)));
        let mut broken = chi.clone();
        let victim = broken.iter().find(|i| i.len() == 2 && i[&0].level() == 2).unwrap().clone();
        broken.remove(&victim);
        assert!(!well_formed_check(&broken, 2));
        assert!(!well_formed_check(&chi, 3));
    }

    #[test]
    fn extensions() {
        let x = vec![el(&[(0, 1), (1, 1)]), el(&[(1, 1), (0, 1)])];
        let start = ChiAssignment::from([(0, Node::new(-1, 2))]);
        for n in 1..12 {
            let extended = extendible_check(&x, &start, 1, n).expect("extension exists");
            assert!(extended[&1].level() >= n);
            assert!(chi_member(&x, &extended));
            let deeper = extendible_check(&x, &extended, 0, n + 3).expect("refinement exists");
            assert!(extended[&0].contains(&deeper[&0]));
        }
        let outside = ChiAssignment::from([(0, Node::new(10, 2))]);
        assert_eq!(extendible_check(&x, &outside, 1, 3), None);
    }

    #[test]
    fn induced_families_are_members() {
        let x = vec![el(&[(0, 1), (1, 1)]), el(&[(1, 1), (0, 1)])];
        let family = induced_family(0, &x, 8);
        for a in family[0].nodes() {
            for b in family[1].nodes() {
                let assignment = ChiAssignment::from([(0, a.clone()), (1, b.clone())]);
                assert!(chi_member(&x, &assignment));
            }
        }
        let single = induced_family(1, &x[..1], 6);
        assert_eq!(single[0].witness(), &int(1));
    }

    #[test]
    fn reconstruction() {
        let base = vec![el(&[(1, 3), (-2, 5), (7, 4)]), el(&[(5, 6), (1, 1), (-1, 9)])];
        let probes = [(0, 1), (1, 0)];
        let scalars = [ratio(3, 2), ratio(-5, 1)];
        let x = close_for_probes(&base, &probes, &scalars).unwrap();
        let eps = pow2(-10);
        for j in 0..3 {
            let family = induced_family(j, &x, 20);
            let report = reconstruct_hom(&x, &family, &probes, &scalars, &eps).unwrap();
            assert!(report.passed(), "{report}");
        }
        let family = induced_family(0, &x, 20);
        let mut forged = family.clone();
        forged[2] = truncate_ideal(Kind::O, &ratio(9, 7), 1, 20);
        let report = reconstruct_hom(&x, &forged, &probes, &scalars, &eps).unwrap();
        assert!(!report.passed_law(Law::Additivity));
        let shallow = induced_family(0, &x, 8);
        assert!(matches!(
            reconstruct_hom(&x, &shallow, &probes, &scalars, &eps),
            Err(RieszError::TooShallow { .. })
        ));
    }

    #[test]
    fn text_form() {
        let x = el(&[(1, 2), (-3, 1)]);
        assert_eq!(x.to_string(), "[1/2,-3/1]");
        assert_eq!("[1/2,-3]".parse::<RieszElement>().unwrap(), x);
        assert_eq!("[1/2,x]".parse::<RieszElement>().unwrap_err().offset, 5);
    }
}
