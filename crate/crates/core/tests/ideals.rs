use proptest::prelude::*;
use signed_bit::ideals::{
    c_slice, cauchy_check, check_c_properties, check_o_ideal, is_unblocked, limit_bounds, o_slice, truncate_ideal,
    CauchySubset, IdealTruncation, Kind,
};
use signed_bit::rational::{pow2, ratio};
use signed_bit::{Node, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-4000i64..4000, 1i64..300).prop_map(|(n, d)| ratio(n, d))
}

fn dyadic() -> impl Strategy<Value = Rational> {
    (-500i64..500, 0i64..8).prop_map(|(n, e)| ratio(n, 1) * pow2(-e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn slices_nest_and_touch(r in rational(), level in -4i64..24) {
        let (o, c) = (o_slice(&r, level), c_slice(&r, level));
        prop_assert!((1..=2).contains(&o.len()));
        prop_assert!((2..=3).contains(&c.len()));
        prop_assert!(o.is_subset(&c));
        let ks: Vec<_> = c.iter().map(|n| n.k().clone()).collect();
        prop_assert!(ks.windows(2).all(|w| &w[1] - &w[0] == 1.into()));
        prop_assert_eq!(c.len() == 3, o.len() == 1);
    }

    #[test]
    fn c_truncations_satisfy_the_conditions(r in rational()) {
        // Denominators below 2^9 keep chains of length 10 decisive.
        let t = truncate_ideal(Kind::C, &r, 1, 16);
        let report = check_c_properties(&t, 10);
        prop_assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn dyadics_show_three_adjacent_nodes(r in dyadic()) {
        let t = truncate_ideal(Kind::C, &r, 1, 16);
        prop_assert!(check_c_properties(&t, 10).all_pass());
        let exponent = (0..).find(|e| (&r * pow2(*e)).is_integer()).unwrap();
        for level in exponent.max(1)..=16 {
            prop_assert_eq!(t.level(level).len(), 3);
        }
    }

    #[test]
    fn interior_deletions_are_noticed(r in rational(), pick in any::<prop::sample::Index>()) {
        let t = truncate_ideal(Kind::C, &r, 1, 12);
        let interior: Vec<&Node> = t.nodes().iter().filter(|n| n.level() > 1 && n.level() < 12).collect();
        let victim = pick.get(&interior);
        prop_assert!(!check_c_properties(&t.without(victim), 10).all_pass());
    }

    #[test]
    fn o_truncations_are_o_ideals(r in rational()) {
        prop_assert!(check_o_ideal(&truncate_ideal(Kind::O, &r, 1, 20)));
    }

    #[test]
    fn truncation_text_round_trips(r in rational(), kind in prop_oneof![Just(Kind::O), Just(Kind::C)]) {
        let t = truncate_ideal(kind, &r, -2, 9);
        prop_assert_eq!(t.to_string().parse::<IdealTruncation>().unwrap(), t);
    }

    #[test]
    fn distinct_rationals_separate(a in rational(), b in rational()) {
        prop_assume!(a != b);
        // Levels up to 2 + log2(1/|a-b|) suffice.
        let t_a = truncate_ideal(Kind::C, &a, 1, 24);
        let t_b = truncate_ideal(Kind::C, &b, 1, 24);
        prop_assert_ne!(t_a.nodes(), t_b.nodes());
    }

    #[test]
    fn o_ideals_are_cauchy(r in rational()) {
        let t = truncate_ideal(Kind::O, &r, 1, 14);
        let s = CauchySubset::from_truncation(&t, |p| p + 2);
        prop_assert!(cauchy_check(&s));
        prop_assert!(is_unblocked(&s));
        for p in 0..10 {
            let (lo, hi) = limit_bounds(&s, p).unwrap();
            prop_assert!(lo <= r && r <= hi);
        }
    }
}
