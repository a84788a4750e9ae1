//! Binary gap words and the usual combinatorics-on-words measurements.
//!
//! All verdicts concern finite prefixes only.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad::slopes::{ones_density as rho, phi};
use crate::quad::QuadSurd;

/// A finite 0/1 word. Bit `i` of a gap word holds `H(i + 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryWord {
    pub bits: Vec<u8>,
    pub origin: String,
}

impl BinaryWord {
    pub fn new(bits: Vec<u8>, origin: impl Into<String>) -> Result<Self> {
        if let Some(i) = bits.iter().position(|&b| b > 1) {
            return Err(Error::Precondition(format!(
                "bit {i} is {}, not 0 or 1",
                bits[i]
            )));
        }
        Ok(BinaryWord {
            bits,
            origin: origin.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn prefix(&self, n: usize) -> BinaryWord {
        BinaryWord {
            bits: self.bits[..n.min(self.len())].to_vec(),
            origin: self.origin.clone(),
        }
    }

    /// Exchange 0 and 1.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord {
            bits: self.bits.iter().map(|b| 1 - b).collect(),
            origin: format!("complement({})", self.origin),
        }
    }

    pub fn to_ascii(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn from_ascii(s: &str, origin: impl Into<String>) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse {
                    line: 1,
                    message: format!("column {}: expected 0 or 1, found {c:?}", i + 1),
                }),
            })
            .collect::<Result<_>>()?;
        Self::new(bits, origin)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// Encodes each gap as `gap / base − 1`.
pub fn gap_word(seq: &[u64], base: u64) -> Result<BinaryWord> {
    if base == 0 {
        return Err(Error::Precondition("gap base must be positive".into()));
    }
    let bits = seq
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let gap = w[1].saturating_sub(w[0]);
            match gap {
                g if g == base => Ok(0),
                g if g == 2 * base => Ok(1),
                g => Err(Error::TwoGapViolation {
                    index: i + 2,
                    gap: g,
                    base,
                }),
            }
        })
        .collect::<Result<_>>()?;
    Ok(BinaryWord {
        bits,
        origin: format!("gaps/{base}"),
    })
}

/// `σ_n = n + Σ_{k=2}^{n} H(k)` with `σ_1 = 1`.
pub fn reconstruct_sigma(word: &BinaryWord) -> Vec<u64> {
    let mut out = Vec::with_capacity(word.len() + 1);
    let mut acc = 0u64;
    out.push(1);
    for (i, &b) in word.bits.iter().enumerate() {
        acc += b as u64;
        out.push(i as u64 + 2 + acc);
    }
    out
}

/// Distinct factors of each length `1..=max_len`.
pub fn factor_complexity(word: &BinaryWord, max_len: usize) -> Vec<usize> {
    (1..=max_len).map(|n| factors(word, n).len()).collect()
}

fn factors(word: &BinaryWord, n: usize) -> HashSet<Vec<u8>> {
    if n == 0 || n > word.len() {
        return HashSet::new();
    }
    word.bits.windows(n).map(<[u8]>::to_vec).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SturmianVerdict {
    /// `p(n) = n + 1` for every `n <= up_to` on this prefix.
    Consistent {
        up_to: usize,
    },
    Refuted {
        n: usize,
        complexity: usize,
    },
}

impl fmt::Display for SturmianVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SturmianVerdict::Consistent { up_to } => {
                write!(
                    f,
                    "consistent with Sturmian up to length {up_to} (finite prefix only)"
                )
            }
            SturmianVerdict::Refuted { n, complexity } => {
                write!(f, "refuted at n={n}: p({n}) = {complexity} != {}", n + 1)
            }
        }
    }
}

pub fn sturmian_verdict(word: &BinaryWord, max_len: usize) -> SturmianVerdict {
    for (i, p) in factor_complexity(word, max_len).into_iter().enumerate() {
        if p != i + 2 {
            return SturmianVerdict::Refuted {
                n: i + 1,
                complexity: p,
            };
        }
    }
    SturmianVerdict::Consistent { up_to: max_len }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub ones: usize,
    pub length: usize,
    pub empirical: f64,
    pub theoretical: Option<String>,
    pub error: Option<f64>,
}

/// Frequency of ones, compared with `α(a) − 1` when `a` is given.
pub fn ones_density(word: &BinaryWord, a: Option<u64>) -> DensityReport {
    let ones = word.bits.iter().filter(|&&b| b == 1).count();
    let empirical = if word.is_empty() {
        0.0
    } else {
        ones as f64 / word.len() as f64
    };
    let th = a.map(rho);
    DensityReport {
        ones,
        length: word.len(),
        empirical,
        error: th.as_ref().map(|t| (empirical - t.to_f64()).abs()),
        theoretical: th.map(|t| t.to_decimal(12)),
    }
}

/// `⌊α·n + β⌋` for `n >= valid_from`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeattyForm {
    pub alpha: QuadSurd,
    pub beta: QuadSurd,
    pub valid_from: u64,
}

impl BeattyForm {
    pub fn new(alpha: QuadSurd, beta: QuadSurd, valid_from: u64) -> Self {
        BeattyForm {
            alpha,
            beta,
            valid_from: valid_from.max(1),
        }
    }

    pub fn eval(&self, n: u64) -> i64 {
        (&(&self.alpha * n as i64) + &self.beta)
            .to_i64_floor()
            .expect("small Beatty value")
    }
}

/// First `n >= valid_from` (1-based) with `seq[n] != ⌊αn + β⌋`.
pub fn beatty_check(seq: &[u64], form: &BeattyForm) -> Option<u64> {
    (form.valid_from..=seq.len() as u64).find(|&n| form.eval(n) != seq[n as usize - 1] as i64)
}

/// Offsets `β` with `⌊αn + β⌋ = seq[n−1]` for every `n` form `[lo, hi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BeattyFit {
    pub alpha: QuadSurd,
    pub lo: QuadSurd,
    pub hi: QuadSurd,
}

impl BeattyFit {
    pub fn feasible(&self) -> bool {
        self.lo.cmp_exact(&self.hi) == Some(std::cmp::Ordering::Less)
    }
}

pub fn beatty_fit(seq: &[u64], alpha: &QuadSurd) -> Option<BeattyFit> {
    let mut lo: Option<QuadSurd> = None;
    let mut hi: Option<QuadSurd> = None;
    for (i, &s) in seq.iter().enumerate() {
        let base = -(alpha * (i as i64 + 1)) + s as i64;
        let top = &base + 1;
        if lo
            .as_ref()
            .is_none_or(|l| base.cmp_exact(l) == Some(std::cmp::Ordering::Greater))
        {
            lo = Some(base);
        }
        if hi
            .as_ref()
            .is_none_or(|h| top.cmp_exact(h) == Some(std::cmp::Ordering::Less))
        {
            hi = Some(top);
        }
    }
    Some(BeattyFit {
        alpha: alpha.clone(),
        lo: lo?,
        hi: hi?,
    })
}

/// Max difference in ones count between same-length factors, for `n <= max_len`.
pub fn balance_report(word: &BinaryWord, max_len: usize) -> Vec<usize> {
    let mut prefix = vec![0usize; word.len() + 1];
    for (i, &b) in word.bits.iter().enumerate() {
        prefix[i + 1] = prefix[i] + b as usize;
    }
    (1..=max_len.min(word.len()))
        .map(|n| {
            let counts = (0..=word.len() - n).map(|i| prefix[i + n] - prefix[i]);
            let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
            hi - lo
        })
        .collect()
}

/// `H(n) = ⌊(n−1)/φ⌋ − ⌊(n−2)/φ⌋` for `2 <= n <= len + 1`.
pub fn golden_mechanical_word(len: usize) -> BinaryWord {
    let inv_phi = phi().recip().expect("nonzero");
    let fl = |m: i64| (&inv_phi * m).to_i64_floor().expect("small floor");
    let bits = (2..len as i64 + 2)
        .map(|n| (fl(n - 1) - fl(n - 2)) as u8)
        .collect();
    BinaryWord {
        bits,
        origin: "mechanical(1/phi)".into(),
    }
}

/// First word position where `word` differs from the mechanical word.
pub fn check_golden_mechanical(word: &BinaryWord) -> Option<usize> {
    let mech = golden_mechanical_word(word.len());
    word.bits.iter().zip(&mech.bits).position(|(a, b)| a != b)
}

/// Fixed point of `0 → 01, 1 → 0`.
pub fn fibonacci_word(len: usize) -> BinaryWord {
    let mut w = vec![0u8];
    while w.len() < len {
        w = w
            .iter()
            .flat_map(|&b| if b == 0 { vec![0, 1] } else { vec![0] })
            .collect();
    }
    w.truncate(len);
    BinaryWord {
        bits: w,
        origin: "fibonacci".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::{normalize, run_golden};
    use crate::ground::GroundSequence;

    fn sieve_word(a: u64, b: u64, len: usize) -> BinaryWord {
        let g = if (a, b) == (1, 0) {
            GroundSequence::Naturals
        } else {
            GroundSequence::arith(a, b).unwrap()
        };
        let t = run_golden(&g, len as u64 + 1, len as u64 + 1).unwrap();
        gap_word(&normalize(&t).unwrap().sigma[..len + 1], 1).unwrap()
    }

    #[test]
    fn gap_word_prefixes() {
        assert_eq!(&sieve_word(1, 0, 6).bits[..], [0, 1, 0, 1, 1, 0]);
        assert_eq!(&sieve_word(2, 0, 7).bits[..], [1, 0, 0, 0, 1, 0, 1]);
        assert!(gap_word(&[3, 6, 9, 12], 3)
            .unwrap()
            .bits
            .iter()
            .all(|&b| b == 0));
    }

    #[test]
    fn original_scale_base() {
        let t = run_golden(&GroundSequence::arith(3, 1).unwrap(), 300, 300).unwrap();
        let w1 = gap_word(&t.survivors, 3).unwrap();
        let w2 = gap_word(&normalize(&t).unwrap().sigma, 1).unwrap();
        assert_eq!(w1.bits, w2.bits);
    }

    #[test]
    fn two_gap_violation() {
        assert_eq!(
            gap_word(&[1, 2, 5], 1),
            Err(Error::TwoGapViolation {
                index: 3,
                gap: 3,
                base: 1
            })
        );
    }

    #[test]
    fn reconstruction() {
        let w = BinaryWord::new(vec![1, 0, 0], "t").unwrap();
        assert_eq!(reconstruct_sigma(&w), vec![1, 3, 4, 5]);
        assert_eq!(
            reconstruct_sigma(&BinaryWord::new(vec![], "t").unwrap()),
            vec![1]
        );
        let t = run_golden(&GroundSequence::arith(2, 1).unwrap(), 1000, 1000).unwrap();
        let sigma = normalize(&t).unwrap().sigma;
        assert_eq!(reconstruct_sigma(&gap_word(&sigma, 1).unwrap()), sigma);
    }

    #[test]
    fn complexity() {
        assert_eq!(factor_complexity(&sieve_word(2, 0, 1000), 3)[2], 5);
        assert_eq!(factor_complexity(&fibonacci_word(1000), 3)[2], 4);
        let zeros = BinaryWord::new(vec![0; 100], "z").unwrap();
        assert!(factor_complexity(&zeros, 10).iter().all(|&p| p == 1));
        for (a, b) in [(1, 0), (2, 0), (3, 1), (5, 4)] {
            let p = factor_complexity(&sieve_word(a, b, 5000), 16);
            assert!(p.windows(2).all(|x| x[0] <= x[1]), "({a},{b}) {p:?}");
        }
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            sturmian_verdict(&sieve_word(1, 0, 2000), 12),
            SturmianVerdict::Consistent { up_to: 12 }
        );
        assert!(matches!(
            sturmian_verdict(&sieve_word(2, 0, 1000), 12),
            SturmianVerdict::Refuted { n: 3, .. }
        ));
        let alt = BinaryWord::from_ascii(&"01".repeat(50), "alt").unwrap();
        assert_eq!(
            sturmian_verdict(&alt, 5),
            SturmianVerdict::Refuted {
                n: 2,
                complexity: 2
            }
        );
    }

    #[test]
    fn densities() {
        let r = ones_density(&sieve_word(2, 0, 10_000), Some(2));
        assert_eq!(r.theoretical.as_deref(), Some("0.366025403784"));
        assert!(r.error.unwrap() < 1e-2);
        let r = ones_density(&sieve_word(1, 0, 10_000), Some(1));
        assert!(r.error.unwrap() < 1e-2);
        assert_eq!(
            ones_density(&BinaryWord::new(vec![0; 10], "z").unwrap(), None).empirical,
            0.0
        );
    }

    #[test]
    fn beatty() {
        use crate::hiccup::{extraction_run, hiccup_generate, HiccupParams};
        use crate::quad::slopes::metallic_slopes;
        let s2 = metallic_slopes(2);
        let silver = extraction_run(1, 3, 2, &GroundSequence::Naturals, 500).unwrap();
        let form = BeattyForm::new(s2.m.clone(), s2.beta.clone(), 1);
        assert_eq!((form.eval(1), form.eval(2)), (1, 4));
        assert_eq!(beatty_check(&silver, &form), None);
        let wythoff = hiccup_generate(&HiccupParams::new(1, 1, 2, 1).unwrap(), 500);
        assert_eq!(
            beatty_check(&wythoff, &BeattyForm::new(phi(), QuadSurd::integer(0), 1)),
            None
        );
        let a7066 = hiccup_generate(&HiccupParams::new(0, 1, 2, 3).unwrap(), 500);
        let form = BeattyForm::new(&phi() * &phi(), -phi().recip().unwrap(), 2);
        assert_eq!(beatty_check(&a7066, &form), None);
    }

    #[test]
    fn fit() {
        let t = run_golden(&GroundSequence::Naturals, 2000, 2000).unwrap();
        let f = beatty_fit(&t.survivors, &phi()).unwrap();
        assert!(f.feasible());
        let beta = -phi() + 2;
        assert_ne!(beta.cmp_exact(&f.lo), Some(std::cmp::Ordering::Less));
        assert_eq!(beta.cmp_exact(&f.hi), Some(std::cmp::Ordering::Less));
        assert!(!beatty_fit(
            &sieve_word(2, 0, 2000)
                .bits
                .iter()
                .map(|&b| b as u64)
                .collect::<Vec<_>>(),
            &phi()
        )
        .unwrap()
        .feasible());
        assert!(beatty_fit(&[], &phi()).is_none());
    }

    #[test]
    fn balance() {
        assert!(balance_report(&fibonacci_word(2000), 20)
            .iter()
            .all(|&d| d <= 1));
        assert!(
            balance_report(&BinaryWord::new(vec![0; 50], "z").unwrap(), 10)
                .iter()
                .all(|&d| d == 0)
        );
        assert_eq!(balance_report(&sieve_word(2, 0, 1000), 10).len(), 10);
    }

    #[test]
    fn mechanical() {
        assert_eq!(check_golden_mechanical(&sieve_word(1, 0, 10_000)), None);
    }

    #[test]
    fn ascii_round_trip() {
        let w = sieve_word(2, 1, 40);
        assert_eq!(
            BinaryWord::from_ascii(&w.to_ascii(), "x").unwrap().bits,
            w.bits
        );
        assert!(BinaryWord::from_ascii("0120", "x").is_err());
        assert_eq!(w.complement().complement().bits, w.bits);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn complexity_is_monotone(bits in proptest::collection::vec(0u8..2, 30..300)) {
                let w = BinaryWord::new(bits, "p").unwrap();
                let p = factor_complexity(&w, 8);
                prop_assert!(p[0] == 1 || p[0] == 2);
                // every factor except the suffix extends to the right
                prop_assert!(p.windows(2).all(|x| x[1] + 1 >= x[0]));
            }

            #[test]
            fn reconstruct_round_trip(bits in proptest::collection::vec(0u8..2, 0..200)) {
                let w = BinaryWord::new(bits, "p").unwrap();
                prop_assert_eq!(gap_word(&reconstruct_sigma(&w), 1).unwrap().bits, w.bits);
            }
        }
    }
}
