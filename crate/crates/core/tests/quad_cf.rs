use num_bigint::BigInt;
use proptest::prelude::*;
use sieve_core::quad::slopes::{
    deletion_slope, metallic_mean, reverse_mean, slope_alpha, slope_gamma,
};
use sieve_core::quad::{cf_expand, PeriodicCF, QuadSurd};
use sieve_oracle as oracle;

fn flat(cf: &PeriodicCF, n: usize) -> Vec<i128> {
    cf.quotients(n).into_iter().map(i128::from).collect()
}

fn oracle_flat(pre: &[i128], period: &[i128], n: usize) -> Vec<i128> {
    pre.iter()
        .chain(period.iter().cycle())
        .take(n)
        .copied()
        .collect()
}

#[test]
fn slope_expansions_match_reference() {
    for a in 1..=60i128 {
        // α = (a + √(a²+4a))/(2a), aα+1 = (a+2 + √(a²+4a))/2,
        // γ = (2a−1 + √(4a²+12a+1))/(2a)
        let cases = [
            (slope_alpha(a as u64), (a, a * a + 4 * a, 2 * a)),
            (deletion_slope(a as u64), (a + 2, a * a + 4 * a, 2)),
            (
                slope_gamma(a as u64),
                (2 * a - 1, 4 * a * a + 12 * a + 1, 2 * a),
            ),
        ];
        for (x, (p, d, r)) in cases {
            let got = cf_expand(&x, 100_000).unwrap();
            let (pre, period) = oracle::cf(p, d, r);
            let n = 2 * (pre.len() + period.len()) + 10;
            assert_eq!(
                flat(&got, n),
                oracle_flat(&pre, &period, n),
                "a = {a}, x = {x}"
            );
            assert_eq!(got.period.len(), period.len(), "a = {a}, x = {x}");
        }
    }
}

#[test]
fn metallic_means_are_roots() {
    for k in 1..=12i128 {
        let m = metallic_mean(k as u64);
        assert_eq!(
            m.floor(),
            BigInt::from(oracle::floor_surd(k, 1, (k * k + 4) as u128, 2))
        );
        // M² = kM + 1
        let lhs = &m * &m;
        let rhs = &(&m * k as i64) + 1;
        assert_eq!(lhs, rhs);
        let r = reverse_mean(k as u64);
        let rr = &r * &r;
        let want = &(&r * (k as i64 + 1)) - 1;
        assert_eq!(rr, want);
    }
}

proptest! {
    #[test]
    fn floor_is_exact(p in -10_000i64..10_000, q in -200i64..200, d in 2u64..200, r in 1i64..500) {
        let x = QuadSurd::from_parts(p, q, d, r);
        let want = oracle::floor_surd(p as i128, q as i128, d as u128, r as i128);
        prop_assert_eq!(x.floor(), BigInt::from(want));
    }

    #[test]
    fn floor_of_sum_and_product(p in -500i64..500, q in 1i64..50, d in 2u64..60, r in 1i64..40, n in -300i64..300) {
        let x = QuadSurd::from_parts(p, q, d, r);
        let shifted = &x + n;
        let scaled = &x * n;
        prop_assert_eq!(shifted.floor(), BigInt::from(oracle::floor_surd((p + n * r) as i128, q as i128, d as u128, r as i128)));
        prop_assert_eq!(scaled.floor(), BigInt::from(oracle::floor_surd((p * n) as i128, (q * n) as i128, d as u128, r as i128)));
    }

    #[test]
    fn expansion_matches_reference(p in -50i128..50, d in 2i128..400, r in 1i128..40) {
        let s = oracle::isqrt(d as u128) as i128;
        prop_assume!(s * s != d);
        let x = QuadSurd::from_parts(p as i64, 1, d as u64, r as i64);
        let got = cf_expand(&x, 100_000).unwrap();
        let (pre, period) = oracle::cf(p, d, r);
        let n = 2 * (pre.len() + period.len()) + 6;
        prop_assert_eq!(flat(&got, n), oracle_flat(&pre, &period, n));
    }
}
