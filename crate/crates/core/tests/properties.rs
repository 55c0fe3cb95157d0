//! Cross-module invariants, checked by random sampling and by exhaustive
//! sweeps over small moduli.

use dedekind_core::confrac::{alt_sum, cf_expand, digit_sum};
use dedekind_core::dedekind::{dedekind_sum_bhk, dedekind_sum_def, mu};
use dedekind_core::exactmath::{gcd, mod_inverse, units, Rational};
use dedekind_core::permutation::{inversions_fast, inversions_meyer, inversions_naive};
use dedekind_core::theorems::{
    check_altsum_mod8, check_girstmair, check_neccond_equivalence, classify_pair, cond_8z,
    jabuka, Ladder,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn coprime_pair(max_b: u64) -> impl Strategy<Value = (u64, u64)> {
    (2..=max_b)
        .prop_flat_map(|b| (1..b, Just(b)))
        .prop_filter("coprime", |&(a, b)| gcd(a, b) == Ok(1))
}

fn coprime_triple(max_b: u64) -> impl Strategy<Value = (u64, u64, u64)> {
    (3..=max_b)
        .prop_flat_map(|b| (1..b, 1..b, Just(b)))
        .prop_filter("coprime", |&(x, y, b)| gcd(x, b) == Ok(1) && gcd(y, b) == Ok(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn bhk_matches_definition((a, b) in coprime_pair(5000)) {
        prop_assert_eq!(dedekind_sum_bhk(a, b).unwrap(), dedekind_sum_def(a, b).unwrap());
    }

    #[test]
    fn sum_reduces_mod_b((a, b) in coprime_pair(2000), k in 1u64..50) {
        prop_assert_eq!(
            dedekind_sum_bhk(a + k * b, b).unwrap().value,
            dedekind_sum_bhk(a, b).unwrap().value
        );
    }

    #[test]
    fn meyer_matches_fenwick((a, b) in coprime_pair(20_000)) {
        prop_assert_eq!(inversions_fast(a, b).unwrap(), inversions_meyer(a, b).unwrap());
    }

    #[test]
    fn inverse_has_same_t_and_sum((a, b) in coprime_pair(100_000)) {
        let inv = mod_inverse(a as i64, b).unwrap();
        prop_assert_eq!(alt_sum(inv, b).unwrap(), alt_sum(a, b).unwrap());
        prop_assert_eq!(dedekind_sum_bhk(inv, b).unwrap().value, dedekind_sum_bhk(a, b).unwrap().value);
    }

    #[test]
    fn expansion_round_trips((a, b) in coprime_pair(1_000_000)) {
        let cf = cf_expand(a, b).unwrap();
        prop_assert_eq!(cf.len() % 2, 1);
        let back = cf.eval().unwrap();
        prop_assert_eq!((back.a(), back.b()), (a, b));
        prop_assert!(cf.alt_sum().unsigned_abs() <= cf.digit_sum());
    }

    #[test]
    fn large_moduli_congruences((a, b) in coprime_pair(1_000_000)) {
        prop_assert!(check_altsum_mod8(a, b).unwrap());
        prop_assert!(check_girstmair(a, b).unwrap().holds());
        let six_b_s = dedekind_sum_bhk(a, b).unwrap().value.scale(6 * b as i128);
        prop_assert!(six_b_s.is_integer());
    }

    #[test]
    fn classification_is_consistent((a1, a2, b) in coprime_triple(3000)) {
        let c = classify_pair(a1, a2, b).unwrap();
        prop_assert!(c.is_consistent());
        prop_assert_eq!(c.cond_c, cond_8z(a1, a2, b).unwrap());
        prop_assert_eq!(c.jabuka, jabuka(a1, a2, b).unwrap());
        prop_assert!(check_neccond_equivalence(a1, a2, b).unwrap().unanimous());
        // swapping the pair negates the difference and keeps every verdict
        let d = classify_pair(a2, a1, b).unwrap();
        prop_assert_eq!(d.delta12s, -c.delta12s);
        prop_assert_eq!((d.ladder, d.cond_c, d.jabuka), (c.ladder, c.cond_c, c.jabuka));
    }
}

#[test]
fn three_way_inversions_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut n = 0;
    while n < 500 {
        let b = rng.gen_range(2..=3000u64);
        let a = rng.gen_range(1..b);
        if gcd(a, b) != Ok(1) {
            continue;
        }
        let naive = inversions_naive(a, b).unwrap();
        assert_eq!(naive, inversions_fast(a, b).unwrap(), "({a}, {b})");
        assert_eq!(naive, inversions_meyer(a, b).unwrap(), "({a}, {b})");
        assert!(naive <= b * (b - 1) / 2);
        n += 1;
    }
}

#[test]
fn negation_and_digit_parity_to_500() {
    for b in 2..=500u64 {
        for a in units(b) {
            let s = dedekind_sum_bhk(a, b).unwrap().value;
            assert_eq!(dedekind_sum_bhk(b - a, b).unwrap().value, -s);
            let (t, d) = (alt_sum(a, b).unwrap(), digit_sum(a, b).unwrap());
            assert_eq!(t.rem_euclid(2) as u64, d % 2);
        }
    }
}

#[test]
fn lerch_parity_for_multipliers_above_the_modulus() {
    // I(b, a) with b > a, the orientation the reciprocity sweep relies on
    for a in 1..=60u64 {
        for b in a + 1..=200 {
            if gcd(a, b) != Ok(1) {
                continue;
            }
            let i = inversions_fast(b, a).unwrap();
            assert_eq!(i % 2, mu(b, a).unwrap() % 2, "I({b}, {a})");
        }
    }
}

#[test]
fn ladder_levels_are_all_reachable() {
    let mut seen = std::collections::BTreeSet::new();
    for b in 2..=60 {
        let us: Vec<u64> = units(b).collect();
        for (i, &x) in us.iter().enumerate() {
            for &y in &us[i + 1..] {
                seen.insert(classify_pair(x, y, b).unwrap().ladder);
            }
        }
    }
    assert_eq!(
        seen.into_iter().collect::<Vec<_>>(),
        vec![Ladder::None, Ladder::One, Ladder::Two, Ladder::Four, Ladder::Eight]
    );
}

#[test]
fn meyer_value_with_non_integral_terms() {
    // s(1, 4) = 1/8: -3·4·(1/8) = -3/2 and (3·2)/4 = 3/2
    assert_eq!(dedekind_sum_def(1, 4).unwrap().value, Rational::new(1, 8).unwrap());
    assert_eq!(inversions_meyer(1, 4), Ok(0));
}
