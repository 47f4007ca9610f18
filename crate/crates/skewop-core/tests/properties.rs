//! Randomized structural invariants for the exact layers.

use proptest::prelude::*;

use skewop_core::ensemble::{EnsembleSpec, FieldKind, WeightFamily};
use skewop_core::gamma::{gamma_ratio, rising_factorial};
use skewop_core::partition::{vertical_strips, Partition};
use skewop_core::poly::UniPoly;
use skewop_core::rational::{parse_rat, rat, rat_int, Rat};
use skewop_core::schur::{elementary_symmetric, pieri_e, schur_eval};
use skewop_core::skew::check_equal;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec((0usize..8, small_rat()), 0..6)
        .prop_map(UniPoly::from_terms)
}

fn small_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=4, 0..4).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn rational_display_round_trips(x in small_rat()) {
        prop_assert_eq!(parse_rat(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn poly_addition_commutes_and_evaluates(a in small_poly(), b in small_poly(), x in small_rat()) {
        let ab = &a + &b;
        prop_assert_eq!(&ab, &(&b + &a));
        prop_assert_eq!(ab.eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!(&a - &a, UniPoly::zero());
    }

    #[test]
    fn poly_shift_is_monomial_multiplication(a in small_poly(), k in 0usize..5, x in small_rat()) {
        let mut xk = Rat::from_integer(1.into());
        for _ in 0..k { xk *= &x; }
        prop_assert_eq!(a.shift_mul(k).eval(&x), xk * a.eval(&x));
    }

    #[test]
    fn doubling_round_trips(kappa in small_partition()) {
        prop_assert_eq!(kappa.doubled().as_doubled(), Some(kappa.clone()));
        prop_assert_eq!(kappa.squared().as_squared(), Some(kappa.clone()));
        // a doubled shape has even weight; a squared shape has even length
        prop_assert_eq!(kappa.doubled().weight() % 2, 0);
        prop_assert_eq!(kappa.squared().len() % 2, 0);
    }

    #[test]
    fn strips_grow_by_at_most_one_per_row(kappa in small_partition(), m in 0usize..4) {
        let max_rows = 6;
        for lambda in vertical_strips(&kappa, m, max_rows) {
            prop_assert!(lambda.len() <= max_rows);
            prop_assert_eq!(lambda.weight(), kappa.weight() + m);
            for i in 0..max_rows {
                let grow = lambda.part(i).wrapping_sub(kappa.part(i));
                prop_assert!(grow <= 1);
            }
        }
    }

    #[test]
    fn pieri_expansion_evaluates_correctly(kappa in small_partition(), m in 0usize..3) {
        // three fixed but unstructured points; skip shapes wider than the
        // variable count, where the Schur value is identically zero
        let points = [rat(2, 3), rat(-5, 2), rat(7, 4)];
        let lhs = elementary_symmetric(m, &points) * schur_eval(&kappa, &points).unwrap();
        let rhs: Rat = pieri_e(m, &kappa, points.len())
            .iter()
            .map(|(shape, c)| c * schur_eval(shape, &points).unwrap())
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rising_factorial_splits(x in small_rat(), a in 0usize..6, b in 0usize..6) {
        let whole = rising_factorial(&x, a + b);
        let split = rising_factorial(&x, a) * rising_factorial(&(&x + rat_int(a as i64)), b);
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn gamma_ratio_inverts_rising_factorial(x in small_rat(), m in 0usize..6) {
        let shifted = &x + rat_int(m as i64);
        prop_assert_eq!(gamma_ratio(&shifted, &x).unwrap(), rising_factorial(&x, m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn derivation_agrees_with_closed_form_on_random_parameters(
        field_q in any::<bool>(),
        n in 1usize..=3,
        family_pick in 0usize..4,
        p1 in (0i64..=6, 1i64..=2).prop_map(|(a, b)| rat(a, b)),
        p2 in (1i64..=8, 1i64..=2).prop_map(|(a, b)| rat(a, b)),
    ) {
        let field = if field_q { FieldKind::Quaternion } else { FieldKind::Real };
        let family = match family_pick {
            0 => WeightFamily::Gaussian,
            1 => WeightFamily::Induced { alpha: p1.clone() },
            // keep alpha2 far enough above the pole line for any n <= 3
            2 => WeightFamily::Spherical {
                alpha1: p1.clone(),
                alpha2: rat_int(2 * n as i64) + &p1 + rat(3, 2) + &p2,
            },
            _ => WeightFamily::Antispherical { beta1: p1.clone(), beta2: p2.clone() },
        };
        let spec = EnsembleSpec::new(field, family, n).unwrap();
        let report = check_equal(&spec).unwrap();
        prop_assert!(report.is_equal(), "{:?}: {:?}", spec, report.first_diff);
    }
}
