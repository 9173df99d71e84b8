use proptest::prelude::*;
use signed_bit::rational::{mul_pow2, ratio};
use signed_bit::{Node, Rational, Role};

fn node() -> impl Strategy<Value = Node> {
    (-1000i64..1000, -6i64..20).prop_map(|(k, n)| Node::new(k, n))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-5000i64..5000, 1i64..500).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn every_child_names_its_parent(n in node()) {
        for role in Role::ALL {
            let child = n.child(role);
            prop_assert!(child.parents().contains(&(n.clone(), role)));
            prop_assert!(n.contains(&child));
        }
    }

    #[test]
    fn every_parent_names_its_child(n in node()) {
        for (parent, role) in n.parents() {
            prop_assert_eq!(parent.child(role), n.clone());
        }
    }

    #[test]
    fn text_form_round_trips(n in node()) {
        prop_assert_eq!(n.to_string().parse::<Node>().unwrap(), n);
    }

    #[test]
    fn joins_are_symmetric_and_contained(a in node(), b in node()) {
        let ab = a.join(&b);
        prop_assert_eq!(&ab, &b.join(&a));
        if let Some(j) = ab {
            prop_assert!(a.contains(&j) && b.contains(&j));
            // The intersection is exactly the join: its midpoint lies in both.
            prop_assert!(a.contains_point(&j.midpoint()) && b.contains_point(&j.midpoint()));
        }
    }

    #[test]
    fn containment_is_interval_inclusion(a in node(), b in node()) {
        let nested = a.left() <= b.left() && b.right() <= a.right();
        prop_assert_eq!(a.contains(&b), nested);
    }

    #[test]
    fn containment_is_reachable_through_parents(n in node(), up in 1u32..6) {
        // Every node containing n at a lower level is an iterated parent.
        let mut layer = vec![n.clone()];
        for _ in 0..up {
            let mut next: Vec<Node> = layer.iter().flat_map(|x| x.parents()).map(|(p, _)| p).collect();
            next.sort();
            next.dedup();
            layer = next;
        }
        let level = n.level() - i64::from(up);
        let centre = mul_pow2(&n.midpoint(), level).floor().to_integer();
        for k in -3..=3 {
            let candidate = Node::new(&centre + k, level);
            prop_assert_eq!(candidate.contains(&n), layer.contains(&candidate));
        }
    }

    #[test]
    fn midpoint_lookup_inverts(n in node()) {
        prop_assert_eq!(Node::with_midpoint(&n.midpoint(), n.level()), Some(n));
    }

    #[test]
    fn point_membership_matches_endpoints(n in node(), r in rational()) {
        prop_assert_eq!(n.contains_point(&r), n.left() < r && r < n.right());
        prop_assert_eq!(n.closure_contains(&r), n.left() <= r && r <= n.right());
    }

    #[test]
    fn extreme_descendants_share_an_endpoint(n in node(), i in 1u32..10) {
        let (left, right) = (n.leftmost_descendant(i), n.rightmost_descendant(i));
        prop_assert_eq!(left.left(), n.left());
        prop_assert_eq!(right.right(), n.right());
        prop_assert!(left.is_extreme_descendant_of(&n) && right.is_extreme_descendant_of(&n));
        let middle = n.child(Role::Middle);
        prop_assert!(!middle.is_extreme_descendant_of(&n));
    }
}
