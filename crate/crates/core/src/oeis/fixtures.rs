//! Vendored sequence prefixes and the sieve outputs they should match.

use serde::Serialize;

use super::{compare, parse_bfile, BFile, Comparison};
use crate::error::{Error, Result};
use crate::golden::{normalize, run_golden};
use crate::ground::GroundSequence;
use crate::hiccup::{hiccup_generate, HiccupParams};
use crate::word::gap_word;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    pub text: &'static str,
    /// Compared for information only; a mismatch is not a failure.
    pub report_only: bool,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "A099267",
        description: "survivors of the golden sieve on N",
        text: include_str!("../../data/oeis/A099267.txt"),
        report_only: false,
    },
    Fixture {
        id: "A007066",
        description: "deletions of the golden sieve on N",
        text: include_str!("../../data/oeis/A007066.txt"),
        report_only: false,
    },
    Fixture {
        id: "A000201",
        description: "lower Wythoff, s(n+1) - 2",
        text: include_str!("../../data/oeis/A000201.txt"),
        report_only: false,
    },
    Fixture {
        id: "A001950",
        description: "upper Wythoff, d(n+1) - 2",
        text: include_str!("../../data/oeis/A001950.txt"),
        report_only: false,
    },
    Fixture {
        id: "A086377",
        description: "(1,1,3,2)-hiccup",
        text: include_str!("../../data/oeis/A086377.txt"),
        report_only: false,
    },
    Fixture {
        id: "A003849",
        description: "Fibonacci word, complemented gap word on N from H(3)",
        text: include_str!("../../data/oeis/A003849.txt"),
        report_only: false,
    },
    Fixture {
        id: "A003622",
        description: "normalized survivors on 2N+1",
        text: include_str!("../../data/oeis/A003622.txt"),
        report_only: true,
    },
    Fixture {
        id: "A003623",
        description: "normalized deletions on 2N+1",
        text: include_str!("../../data/oeis/A003623.txt"),
        report_only: true,
    },
];

pub fn fixture(id: &str) -> Result<BFile> {
    let f = FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Catalogue(format!("no fixture {id}")))?;
    let mut b = parse_bfile(f.text)?;
    b.id.get_or_insert_with(|| f.id.to_string());
    Ok(b)
}

/// The artifact-side sequence for a fixture, long enough to cover `len` terms
/// starting at the fixture's first index.
pub fn generate(id: &str, len: usize) -> Result<Vec<i128>> {
    let n = len as u64 + 2;
    let to_i = |v: &[u64]| v.iter().map(|&x| x as i128).collect::<Vec<_>>();
    Ok(match id {
        "A099267" => to_i(&run_golden(&GroundSequence::Naturals, n, n)?.survivors[..len]),
        "A007066" => to_i(&run_golden(&GroundSequence::Naturals, n, n)?.deletions[..len]),
        "A000201" => run_golden(&GroundSequence::Naturals, n, n)?.survivors[1..=len]
            .iter()
            .map(|&s| s as i128 - 2)
            .collect(),
        "A001950" => run_golden(&GroundSequence::Naturals, n, n)?.deletions[1..=len]
            .iter()
            .map(|&d| d as i128 - 2)
            .collect(),
        "A086377" => to_i(&hiccup_generate(&HiccupParams::new(1, 1, 3, 2)?, len)),
        "A003849" => {
            let t = run_golden(&GroundSequence::Naturals, n + 2, n + 2)?;
            let w = gap_word(&t.survivors, 1)?.complement();
            w.bits[1..=len].iter().map(|&b| b as i128).collect()
        }
        "A003622" | "A003623" => {
            let pair = normalize(&run_golden(&GroundSequence::arith(2, 1)?, n, n)?)?;
            to_i(
                &if id == "A003622" {
                    pair.sigma
                } else {
                    pair.delta
                }[..len],
            )
        }
        _ => return Err(Error::Catalogue(format!("no generator for {id}"))),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub report_only: bool,
    pub expected_length: usize,
    pub comparison: Comparison,
}

impl FixtureCheck {
    /// Full printed length matched.
    pub fn passed(&self) -> bool {
        self.comparison.matches() && self.comparison.match_length == self.expected_length
    }
}

pub fn check_fixture(f: &Fixture) -> Result<FixtureCheck> {
    let b = fixture(f.id)?;
    let start = b.entries.first().map_or(0, |e| e.0);
    let seq = generate(f.id, b.len())?;
    Ok(FixtureCheck {
        id: f.id,
        description: f.description,
        report_only: f.report_only,
        expected_length: b.len(),
        comparison: compare(&seq, &b, start),
    })
}

pub fn check_fixtures() -> Result<Vec<FixtureCheck>> {
    FIXTURES.iter().map(check_fixture).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse_with_ids() {
        for f in FIXTURES {
            let b = fixture(f.id).unwrap();
            assert_eq!(b.id.as_deref(), Some(f.id));
            assert!(b.len() >= 10, "{}", f.id);
        }
        assert!(fixture("A000000").is_err());
    }

    #[test]
    fn must_pass_fixtures_match() {
        for c in check_fixtures().unwrap().iter().filter(|c| !c.report_only) {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn fibonacci_word_alignment() {
        let c = check_fixture(FIXTURES.iter().find(|f| f.id == "A003849").unwrap()).unwrap();
        assert_eq!(c.comparison.match_length, 10);
    }
}
