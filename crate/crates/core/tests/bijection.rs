//! Round trips between intersection numbers and coordinates.

use dynnikov::{
    coordinates_from_intersections, intersections_from_coordinates, validate_intersections, BigDynnikovCoordinates,
    BigInt, DynnikovCoordinates, IntersectionVector,
};
use proptest::prelude::*;
use std::collections::HashSet;

fn coords(bound: i64) -> impl Strategy<Value = DynnikovCoordinates> {
    (2usize..=6)
        .prop_flat_map(move |n| {
            (
                Just(n),
                prop::collection::vec(-bound..=bound, n),
                prop::collection::vec(-bound..=bound, n),
                -bound..=bound,
                -bound..=bound,
            )
        })
        .prop_map(|(n, a, b, t, c)| {
            // c <= 0 forces T = 0
            let t = if c > 0 { t } else { 0 };
            DynnikovCoordinates::from_i64(n, &a, &b, t, c).unwrap()
        })
        .prop_filter("outside the excluded set", |d| !d.is_excluded())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn decode_then_encode_is_identity(d in coords(6)) {
        let v = intersections_from_coordinates(&d).unwrap();
        let report = validate_intersections(&v);
        prop_assert!(report.is_valid(), "{report}");
        let back = coordinates_from_intersections(&v, d.twist_sign()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn decoded_vectors_have_parity(d in coords(6)) {
        let v = intersections_from_coordinates(&d).unwrap();
        let cp = v.cplus();
        for w in v.beta().windows(2) {
            prop_assert_eq!((w[0] - w[1]).rem_euclid(2), 0);
        }
        for pair in v.alpha().chunks(2) {
            prop_assert_eq!((pair[0] + pair[1] - cp).rem_euclid(2), 0);
        }
        prop_assert!(v.alpha().iter().chain(v.beta()).all(|x| *x >= 0));
        prop_assert!(*v.gamma() >= 0);
    }

    #[test]
    fn bigint_agrees_with_i64(d in coords(40)) {
        let big = BigDynnikovCoordinates::new(
            d.n(),
            d.a().iter().map(|&x| BigInt::from(x)).collect(),
            d.b().iter().map(|&x| BigInt::from(x)).collect(),
            BigInt::from(*d.twist()),
            BigInt::from(*d.c()),
        ).unwrap();
        let small = intersections_from_coordinates(&d).unwrap();
        let large = intersections_from_coordinates(&big).unwrap();
        let widen = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let (alpha, beta) = (widen(small.alpha()), widen(small.beta()));
        prop_assert_eq!(large.alpha(), alpha.as_slice());
        prop_assert_eq!(large.beta(), beta.as_slice());
        prop_assert_eq!(large.gamma(), &BigInt::from(*small.gamma()));
    }
}

#[test]
fn bigint_handles_values_past_i64() {
    let huge = BigInt::from(i64::MAX) * BigInt::from(4);
    let d = BigDynnikovCoordinates::new(
        2,
        vec![huge.clone(), -huge.clone()],
        vec![huge.clone(), BigInt::from(0)],
        -huge.clone(),
        BigInt::from(3),
    )
    .unwrap();
    let v = intersections_from_coordinates(&d).unwrap();
    assert!(validate_intersections(&v).is_valid());
    assert_eq!(coordinates_from_intersections(&v, d.twist_sign()).unwrap(), d);
}

/// Over every small vector with n = 2, validation accepts exactly the
/// vectors that some coordinate vector decodes to.
#[test]
fn validator_accepts_exactly_the_image_of_decoding() {
    let mut image = HashSet::new();
    for entries in product(6, &(-4..=4)) {
        let d = DynnikovCoordinates::from_i64(2, &entries[0..2], &entries[2..4], entries[4], entries[5]).unwrap();
        if !d.is_excluded() {
            image.insert(intersections_from_coordinates(&d).unwrap());
        }
    }

    let range = 0..=3i64;
    let mut accepted = 0usize;
    for a in product(4, &range) {
        for b in product(3, &range) {
            for gamma in range.clone() {
                for c in -2..=2 {
                    let v = IntersectionVector::from_i64(2, &a, &b, gamma, c).unwrap();
                    let valid = validate_intersections(&v).is_valid();
                    assert_eq!(valid, image.contains(&v), "{v:?}");
                    accepted += valid as usize;
                }
            }
        }
    }
    assert!(accepted > 100, "only {accepted} valid vectors");
}

fn product(len: usize, range: &std::ops::RangeInclusive<i64>) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                range.clone().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}
