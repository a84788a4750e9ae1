use proptest::prelude::*;
use sieve_core::rank_transform::{
    apply_t, check_equivalence, companion, fixed_point, joint_rank_companion, BlockSequence,
};
use sieve_oracle as oracle;

#[test]
fn block_inputs_reproduce_the_sieve() {
    for a in 2..=5u64 {
        for b in 1..a {
            let u = BlockSequence::new(a, b).unwrap();
            let state = fixed_point(&u, 400, 2000);
            assert!(state.converged);
            let (s, d) = oracle::golden(|k| a * k + b, 400);
            let unmap = |v: &u64| (v - b) / a;
            assert_eq!(
                state.r,
                s.iter().map(unmap).collect::<Vec<_>>(),
                "({a},{b})"
            );
            assert_eq!(
                companion(&state.r, a, b),
                d.iter().map(unmap).collect::<Vec<_>>(),
                "({a},{b})"
            );
            assert_eq!(check_equivalence(a, b, 400).unwrap(), None);
        }
    }
}

#[test]
fn identity_input_gives_wythoff_pair() {
    let id = |n: u64| n;
    let r = fixed_point(&id, 500, 1000).r;
    assert_eq!(r, (1..=500).map(oracle::lower_wythoff).collect::<Vec<_>>());
    let c = joint_rank_companion(&id, &r, 10_000).unwrap();
    // upper Wythoff ⌊nφ²⌋ = ⌊nφ⌋ + n
    assert_eq!(
        c,
        (1..=500)
            .map(|n| oracle::lower_wythoff(n) + n)
            .collect::<Vec<_>>()
    );
}

proptest! {
    #[test]
    fn fixed_point_is_stable(a in 2u64..6, b_seed in 1u64..6, n in 1usize..300) {
        let b = 1 + (b_seed - 1) % (a - 1);
        let u = BlockSequence::new(a, b).unwrap();
        let st = fixed_point(&u, n, 4 * n + 16);
        prop_assert!(st.converged);
        prop_assert_eq!(apply_t(&u, &st.r, n), st.r.clone());
        prop_assert_eq!(joint_rank_companion(&u, &st.r, 1 << 20).unwrap(), companion(&st.r, a, b));
    }
}
