use proptest::prelude::*;
use sieve_core::hiccup::{
    affine_transform, check_half_line, extraction_run, extraction_run_literal, hiccup_generate,
    HiccupParams,
};
use sieve_core::GroundSequence;
use sieve_oracle as oracle;

#[test]
fn hiccup_matches_recurrence() {
    for j in 0..=3 {
        for x in 0..=3 {
            for y in 1..=5 {
                for z in (1..=5).filter(|&z| z != y) {
                    let got = hiccup_generate(&HiccupParams::new(j, x, y, z).unwrap(), 300);
                    assert_eq!(got, oracle::hiccup(j, x, y, z, 300), "({j},{x},{y},{z})");
                }
            }
        }
    }
}

#[test]
fn extraction_matches_minimum_removal() {
    for a in 1..=4 {
        for b in 0..a {
            for j in 0..=2 {
                for (y, z) in [(3, 2), (2, 3), (2, 1), (1, 2), (5, 1), (1, 4)] {
                    let g = GroundSequence::arith(a, b).unwrap();
                    let want = oracle::extraction(j, y, z, |k| a * k + b, 200);
                    assert_eq!(
                        extraction_run(j, y, z, &g, 200).unwrap(),
                        want,
                        "a={a} b={b} j={j} y={y} z={z}"
                    );
                    assert_eq!(extraction_run_literal(j, y, z, &g, 200).unwrap(), want);
                }
            }
        }
    }
}

#[test]
fn squares_ground_by_queue() {
    let g = GroundSequence::Squares;
    let want = oracle::extraction(1, 3, 2, |k| k * k, 100);
    assert_eq!(extraction_run_literal(1, 3, 2, &g, 100).unwrap(), want);
    assert_eq!(extraction_run(1, 3, 2, &g, 100).unwrap(), want);
}

#[test]
fn equal_gaps_rejected() {
    assert!(extraction_run(0, 2, 2, &GroundSequence::Naturals, 5).is_err());
    assert!(HiccupParams::new(0, 1, 0, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extraction_is_transformed_hiccup(a in 1u64..=5, b_seed in 0u64..5, j in 0u64..=3, y in 1u64..=6, z in 1u64..=6, n in 1usize..400) {
        prop_assume!(y != z);
        let b = b_seed % a;
        let got = extraction_run(j, y, z, &GroundSequence::arith(a, b).unwrap(), n).unwrap();
        prop_assert_eq!(&got, &oracle::hiccup(j, a + b, a * y, a * z, n));
        let p = affine_transform(&HiccupParams::new(j, 1, y, z).unwrap(), a, b).unwrap();
        prop_assert_eq!(got, hiccup_generate(&p, n));
        prop_assert_eq!(check_half_line(j, y, z, a, b, n.min(200)).unwrap(), None);
    }

    #[test]
    fn hiccup_gaps_are_y_or_z(j in 0u64..4, x in 0u64..5, y in 1u64..8, z in 1u64..8) {
        prop_assume!(y != z);
        let s = hiccup_generate(&HiccupParams::new(j, x, y, z).unwrap(), 200);
        prop_assert!(s.windows(2).all(|w| w[1] - w[0] == y || w[1] - w[0] == z));
    }
}
