use num_traits::Signed;
use proptest::prelude::*;
use signed_bit::arithmetic::{add, average, compare, max, min, mul, negate, scale, Comparison};
use signed_bit::rational::{pow2, ratio};
use signed_bit::streams::DigitString;
use signed_bit::{Rational, SignedBitNumber};

fn rational() -> impl Strategy<Value = Rational> {
    (-20_000i64..20_000, 1i64..2_500).prop_map(|(n, d)| ratio(n, d))
}

// The partial sum m_l recomputed digit by digit.
fn partial_sum(x: &SignedBitNumber, level: i64) -> Rational {
    (x.start()..=level).fold(ratio(0, 1), |acc, i| acc + ratio(x.digit(i).value().into(), 1) * pow2(-i))
}

fn close(x: &SignedBitNumber, target: &Rational, level: i64) -> bool {
    (x.approx(level) - target).abs() <= pow2(-level)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rational_expansions_are_sound(r in rational()) {
        let x = SignedBitNumber::from_rational(&r);
        for level in x.start() - 2..40 {
            prop_assert_eq!(x.approx(level), partial_sum(&x, level));
            prop_assert!(close(&x, &r, level));
            prop_assert!(x.path_node(level).closure_contains(&r));
        }
    }

    #[test]
    fn path_nodes_form_a_path(r in rational()) {
        let x = SignedBitNumber::from_rational(&r);
        prop_assert!(x.path_node(x.start() - 1).is_midpoint_zero());
        for level in x.start()..30 {
            let parent = x.path_node(level - 1);
            let child = x.path_node(level);
            prop_assert_eq!(parent.child(x.digit(level).role()), child);
        }
    }

    #[test]
    fn oracle_expansions_keep_the_margin(r in rational()) {
        let target = r.clone();
        let x = SignedBitNumber::from_oracle(move |k: i64| &target + pow2(-k) * ratio(1, 3));
        for level in 0..35 {
            prop_assert!((x.approx(level) - &r).abs() * ratio(4, 3) <= pow2(-level));
        }
    }

    #[test]
    fn truncations_round_trip(r in rational(), depth in 0i64..40) {
        let x = SignedBitNumber::from_rational(&r);
        let t = x.truncate(depth);
        let parsed: DigitString = t.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &t);
        prop_assert_eq!(parsed.midpoint(), x.approx(depth));
    }

    #[test]
    fn arithmetic_matches_exact_results(a in rational(), b in rational(), q in rational()) {
        let (x, y) = (SignedBitNumber::from_rational(&a), SignedBitNumber::from_rational(&b));
        prop_assert!(close(&negate(&x), &-&a, 36));
        prop_assert!(close(&add(&x, &y), &(&a + &b), 36));
        prop_assert!(close(&average(&x, &y), &((&a + &b) / ratio(2, 1)), 36));
        prop_assert!(close(&scale(&q, &x), &(&q * &a), 36));
        prop_assert!(close(&min(&x, &y), &a.clone().min(b.clone()), 36));
        prop_assert!(close(&max(&x, &y), &a.clone().max(b.clone()), 36));
        prop_assert!(close(&mul(&x, &y), &(&a * &b), 36));
    }

    #[test]
    fn comparison_is_sound(a in rational(), b in rational(), level in 0i64..30) {
        let (x, y) = (SignedBitNumber::from_rational(&a), SignedBitNumber::from_rational(&b));
        match compare(&x, &y, level) {
            Comparison::Less => prop_assert!(a < b),
            Comparison::Greater => prop_assert!(a > b),
            Comparison::Within(l) => prop_assert!((&a - &b).abs() <= pow2(2 - l)),
        }
    }
}

#[test]
fn explicit_digit_streams() {
    // 0.+-+-... = 1/2 - 1/4 + 1/8 - ... = 1/3
    let x = SignedBitNumber::from_digits(1, |i| if i % 2 == 1 { signed_bit::Digit::Plus } else { signed_bit::Digit::Minus });
    for level in 0..40 {
        assert!(close(&x, &ratio(1, 3), level));
    }
}
