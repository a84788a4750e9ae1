use proptest::prelude::*;
use sieve_core::oeis::fixtures::{check_fixtures, fixture, FIXTURES};
use sieve_core::oeis::{compare, emit_bfile, parse_bfile, BFile};
use sieve_oracle as oracle;

#[test]
fn wythoff_fixture_against_floor() {
    let b = fixture("A000201").unwrap();
    for &(i, v) in &b.entries {
        assert_eq!(v, oracle::lower_wythoff(i as u64) as i128, "index {i}");
    }
}

#[test]
fn survivor_fixtures_against_list_sieve() {
    let (s, d) = oracle::golden(|k| k, 200);
    let bs = fixture("A099267").unwrap();
    let c = compare(&s, &bs, bs.entries[0].0);
    assert!(c.matches(), "{c:?}");
    let bd = fixture("A007066").unwrap();
    // the deletion fixture begins at 1, the first deleted value
    let c = compare(&d, &bd, bd.entries[0].0);
    assert!(c.matches(), "{c:?}");
}

#[test]
fn silver_fixture_against_recurrence() {
    let b = fixture("A086377").unwrap();
    let h = oracle::hiccup(1, 1, 3, 2, b.len());
    assert!(compare(&h, &b, b.entries[0].0).matches());
}

#[test]
fn must_pass_fixtures_hold() {
    for c in check_fixtures().unwrap() {
        if !c.report_only {
            assert!(c.passed(), "{}: {:?}", c.id, c.comparison);
        }
    }
    assert_eq!(FIXTURES.iter().filter(|f| f.report_only).count(), 2);
}

#[test]
fn malformed_lines_report_position() {
    let e = parse_bfile("# A000001\n1 1\n2 x\n").unwrap_err();
    assert!(e.to_string().starts_with("line 3"), "{e}");
}

#[test]
fn mismatch_is_located() {
    let b = parse_bfile("1 2\n2 3\n3 5\n4 7\n").unwrap();
    let c = compare(&[2u64, 3, 5, 8], &b, 1);
    let m = c.mismatch.unwrap();
    assert_eq!((m.index, m.expected, m.actual), (4, 7, 8));
    assert_eq!(c.match_length, 3);
}

proptest! {
    #[test]
    fn emit_parse_round_trip(values in prop::collection::vec(-1_000_000i64..1_000_000, 1..200), start in -5i64..5) {
        let text = emit_bfile(&values, start);
        let b: BFile = parse_bfile(&text).unwrap();
        prop_assert_eq!(b.values(), values.iter().map(|&v| v as i128).collect::<Vec<_>>());
        prop_assert!(compare(&values, &b, start).matches());
    }
}
