use proptest::prelude::*;
use signed_bit::rational::{pow2, ratio};
use signed_bit::riesz::{
    abs_val, chi_member, close_for_probes, elem_in_interval, extendible_check, induced_family, le, minus,
    neg_part, negate, plus, pos, pos_part, reconstruct_hom, seminorm, wedge, ChiAssignment, RieszElement,
};
use signed_bit::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-300i64..300, 1i64..40).prop_map(|(n, d)| ratio(n, d))
}

fn element(dim: usize) -> impl Strategy<Value = RieszElement> {
    prop::collection::vec(rational(), dim).prop_map(RieszElement::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn riesz_identities(x in element(3), y in element(3)) {
        prop_assert_eq!(minus(&pos_part(&x), &neg_part(&x)).unwrap(), x.clone());
        prop_assert_eq!(plus(&pos_part(&x), &neg_part(&x)).unwrap(), abs_val(&x));
        prop_assert!(le(&RieszElement::zero(3), &abs_val(&x)).unwrap());
        let opposite = negate(&plus(&x, &y).unwrap());
        let e = wedge(&wedge(&x, &y).unwrap(), &opposite).unwrap();
        prop_assert!(!pos(&e));
    }

    #[test]
    fn norm_is_archimedean(x in element(4)) {
        prop_assert_eq!(seminorm(&x) == ratio(0, 1), x == RieszElement::zero(4));
    }

    #[test]
    fn pos_of_wedges(a in element(3), b in element(3)) {
        let both = pos(&wedge(&a, &b).unwrap());
        let shared = (0..3).any(|j| a.coord(j) > &ratio(0, 1) && b.coord(j) > &ratio(0, 1));
        prop_assert_eq!(both, shared);
        if both {
            prop_assert!(pos(&a) && pos(&b));
        }
    }

    #[test]
    fn membership_is_a_shared_coordinate(x in prop::collection::vec(element(2), 1..4), ks in prop::collection::vec(-40i64..40, 3), level in 0i64..5) {
        let assignment: ChiAssignment = x.iter().enumerate().zip(&ks).map(|((i, _), k)| (i, signed_bit::Node::new(*k, level))).collect();
        let expected = (0..2).any(|j| assignment.iter().all(|(y, node)| node.contains_point(x[*y].coord(j))));
        prop_assert_eq!(chi_member(&x, &assignment), expected);
        for (y, node) in &assignment {
            let inside = (0..2).any(|j| node.contains_point(x[*y].coord(j)));
            prop_assert_eq!(pos(&elem_in_interval(&x[*y], node)), inside);
        }
    }

    #[test]
    fn induced_selections_are_members(x in prop::collection::vec(element(3), 2..5), j in 0usize..3, seed in any::<u64>()) {
        let family = induced_family(j, &x, 12);
        let mut pick = seed;
        let mut assignment = ChiAssignment::new();
        for (i, t) in family.iter().enumerate() {
            let nodes: Vec<_> = t.nodes().iter().collect();
            pick = pick.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            assignment.insert(i, nodes[(pick >> 33) as usize % nodes.len()].clone());
        }
        prop_assert!(chi_member(&x, &assignment));
    }

    #[test]
    fn members_extend(x in prop::collection::vec(element(2), 2..4), n in 1i64..10) {
        let family = induced_family(0, &x, 4);
        let start = ChiAssignment::from([(0, family[0].nodes().iter().next().unwrap().clone())]);
        for u in 0..x.len() {
            let extended = extendible_check(&x, &start, u, n).expect("X_T over Q^d is extendible");
            prop_assert!(extended[&u].level() >= n);
        }
    }

    #[test]
    fn projections_read_back(base in prop::collection::vec(element(3), 3), j in 0usize..3) {
        let probes = [(0, 1), (1, 2), (2, 0)];
        let scalars = [ratio(1, 3), ratio(-2, 1)];
        let x = close_for_probes(&base, &probes, &scalars).unwrap();
        let family = induced_family(j, &x, 16);
        let report = reconstruct_hom(&x, &family, &probes, &scalars, &pow2(-12)).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }
}
