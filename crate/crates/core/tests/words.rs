use proptest::prelude::*;
use sieve_core::golden::{normalize, run_golden};
use sieve_core::word::{
    factor_complexity, fibonacci_word, gap_word, golden_mechanical_word, reconstruct_sigma,
    BinaryWord,
};
use sieve_core::GroundSequence;
use sieve_oracle as oracle;

fn sigma(a: u64, b: u64, n: u64) -> Vec<u64> {
    normalize(&run_golden(&GroundSequence::arith(a, b).unwrap(), n, n).unwrap())
        .unwrap()
        .sigma
}

#[test]
fn gap_word_matches_reference() {
    for a in 1..=6 {
        for b in 0..a {
            let s = sigma(a, b, 3000);
            assert_eq!(
                gap_word(&s, 1).unwrap().bits,
                oracle::gap_bits(&s, 1),
                "({a},{b})"
            );
        }
    }
}

#[test]
fn complexity_matches_reference() {
    for (a, b) in [(1, 0), (2, 0), (2, 1), (3, 0), (4, 2)] {
        let w = gap_word(&sigma(a, b, 4000), 1).unwrap();
        let p = factor_complexity(&w, 14);
        for (n, &got) in p.iter().enumerate() {
            assert_eq!(
                got,
                oracle::factor_count(&w.bits, n + 1),
                "({a},{b}) n = {}",
                n + 1
            );
        }
    }
}

#[test]
fn golden_word_is_mechanical() {
    // bit k of the (1,0) word marks a gap of 2 between survivors k+1 and k+2
    let w = gap_word(&sigma(1, 0, 5001), 1).unwrap();
    let want: Vec<u8> = (1..=5000u64)
        .map(|n| (oracle::golden_beatty(n + 1) - oracle::golden_beatty(n) - 1) as u8)
        .collect();
    assert_eq!(w.bits, want);
    assert_eq!(golden_mechanical_word(5000).bits.len(), 5000);
}

#[test]
fn fibonacci_word_complexity() {
    let f = fibonacci_word(3000);
    for n in 1..=20 {
        assert_eq!(oracle::factor_count(&f.bits, n), n + 1);
    }
}

#[test]
fn non_two_gap_input_rejected() {
    assert!(gap_word(&[1, 2, 5], 1).is_err());
    assert!(gap_word(&[1, 2], 0).is_err());
}

proptest! {
    #[test]
    fn round_trip_on_sieve_output(a in 2u64..=8, b_seed in 0u64..8, n in 2u64..800) {
        let s = sigma(a, b_seed % a, n);
        prop_assume!(s[0] == 1);
        prop_assert_eq!(reconstruct_sigma(&gap_word(&s, 1).unwrap()), s);
    }

    #[test]
    fn round_trip_on_arbitrary_words(bits in prop::collection::vec(0u8..2, 0..500)) {
        let w = BinaryWord::new(bits.clone(), "random").unwrap();
        let s = reconstruct_sigma(&w);
        prop_assert_eq!(s.len(), bits.len() + 1);
        prop_assert_eq!(gap_word(&s, 1).unwrap().bits, bits);
    }

    #[test]
    fn ascii_round_trip(bits in prop::collection::vec(0u8..2, 0..200)) {
        let w = BinaryWord::new(bits, "random").unwrap();
        prop_assert_eq!(BinaryWord::from_ascii(&w.to_ascii(), "x").unwrap().bits, w.bits);
    }
}
