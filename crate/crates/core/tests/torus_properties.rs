//! Property and grid suites for slope transforms under gluing maps.

use contact_surgery::algebra::Rational;
use contact_surgery::torus::{
    boundary_slopes, brieskorn_splitting, transform_slope, GluingMap, Slope,
};
use proptest::prelude::*;

fn slope_strategy() -> impl Strategy<Value = Slope> {
    (-60i64..=60, -60i64..=60)
        .prop_filter("zero class", |(p, q)| *p != 0 || *q != 0)
        .prop_map(|(p, q)| Slope::new(p, q).unwrap())
}

/// Random determinant-plus-or-minus-one matrix: a product of shears and
/// swaps, so unimodularity holds by construction.
fn gluing_strategy() -> impl Strategy<Value = GluingMap> {
    proptest::collection::vec((0u8..3, -3i64..=3), 1..8).prop_map(|steps| {
        let mut m = GluingMap::identity();
        for (kind, k) in steps {
            let factor = match kind {
                0 => GluingMap::from_rows([[1, k], [0, 1]]).unwrap(),
                1 => GluingMap::from_rows([[1, 0], [k, 1]]).unwrap(),
                _ => GluingMap::from_rows([[0, 1], [1, 0]]).unwrap(),
            };
            m = m.compose(&factor);
        }
        m
    })
}

proptest! {
    #[test]
    fn transform_is_functorial(
        g1 in gluing_strategy(),
        g2 in gluing_strategy(),
        s in slope_strategy()
    ) {
        let stepwise = transform_slope(&g2, transform_slope(&g1, s));
        let composed = transform_slope(&g2.compose(&g1), s);
        prop_assert_eq!(stepwise, composed);
    }

    #[test]
    fn inverse_transform_round_trips(g in gluing_strategy(), s in slope_strategy()) {
        prop_assert_eq!(transform_slope(&g.inverse(), transform_slope(&g, s)), s);
        prop_assert_eq!(g.compose(&g.inverse()), GluingMap::identity());
    }

    #[test]
    fn slope_serde_round_trip(s in slope_strategy()) {
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Slope>(&json).unwrap(), s);
        prop_assert_eq!(s.to_string().parse::<Slope>().unwrap(), s);
    }

    #[test]
    fn gluing_serde_round_trip(g in gluing_strategy()) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<GluingMap>(&json).unwrap(), g);
    }
}

#[test]
fn non_unimodular_json_is_rejected() {
    let json = r#"{"rows":2,"cols":2,"entries":[[2,0],[0,1]]}"#;
    assert!(serde_json::from_str::<GluingMap>(json).is_err());
}

#[test]
fn boundary_slopes_match_the_closed_formulas() {
    for n in 2..=6 {
        for n1 in -10..=-1 {
            for n2 in -10..=-1 {
                for n3 in -10..=-1 {
                    let (s1, s2, s3) = boundary_slopes(n, n1, n2, n3).unwrap();
                    assert_eq!(s1, Slope::new(n1, 2 * n1 - 1).unwrap());
                    assert_eq!(s2, Slope::new(-n2, 3 * n2 + 1).unwrap());
                    assert_eq!(
                        s3,
                        Slope::new(-(n * n3 + 1), (6 * n - 1) * n3 + 6).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn interior_slope_is_the_level_difference() {
    for n in 2..=12 {
        let inverse = brieskorn_splitting(n).unwrap().phi3().inverse();
        for m in 1..n {
            let dividing = Slope::new(-m, 6 * m - 1).unwrap();
            assert_eq!(transform_slope(&inverse, dividing), Slope::integer(m - n));
        }
    }
}

#[test]
fn dividing_slopes_are_monotone_in_the_level() {
    // -m/(6m-1) >= -n/(6n-1) whenever m >= n, as exact rationals.
    for n in 1..=30i64 {
        for m in n..=30 {
            let higher = Rational::new(-m, 6 * m - 1).unwrap();
            let lower = Rational::new(-n, 6 * n - 1).unwrap();
            assert!(higher >= lower, "m = {m}, n = {n}");
        }
    }
}
