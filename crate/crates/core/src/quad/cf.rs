use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::surd::QuadSurd;
use crate::error::{Error, Result};

/// An eventually periodic continued fraction `[a0; pre…, (period…)]`.
///
/// The leading quotient always sits in `preperiod`; the cycle search starts
/// at the first complete quotient after it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicCF {
    pub preperiod: Vec<i64>,
    pub period: Vec<i64>,
}

impl PeriodicCF {
    pub fn a0(&self) -> i64 {
        self.preperiod[0]
    }

    /// The first `n` partial quotients.
    pub fn quotients(&self, n: usize) -> Vec<i64> {
        self.preperiod
            .iter()
            .chain(self.period.iter().cycle())
            .take(n)
            .copied()
            .collect()
    }

    /// True when no shorter block generates the period.
    pub fn period_is_primitive(&self) -> bool {
        let n = self.period.len();
        (1..n)
            .filter(|&l| n.is_multiple_of(l))
            .all(|l| (l..n).any(|i| self.period[i] != self.period[i - l]))
    }
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[{};", self.preperiod[0])?;
        if self.preperiod.len() > 1 {
            write!(f, " {},", join(&self.preperiod[1..]))?;
        }
        write!(f, " ({})]", join(&self.period))
    }
}

/// Expands an irrational surd, detecting the cycle by the first repeated
/// complete quotient `(P + √D)/Q`.
pub fn cf_expand(x: &QuadSurd, max_steps: usize) -> Result<PeriodicCF> {
    if x.is_rational() {
        return Err(Error::Precondition(format!("{x} is rational")));
    }
    // (p + q√d)/r = (P + √D)/Q with D = q²d, sign of q folded into P and Q.
    let sign = if x.q().is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut p = x.p() * &sign;
    let mut q = x.r() * &sign;
    let mut big_d = x.q() * x.q() * x.d();
    if !((&big_d - &p * &p) % &q).is_zero() {
        let aq = q.abs();
        p *= &aq;
        big_d *= &q * &q;
        q *= aq;
    }
    let s = big_d.sqrt();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients = Vec::new();
    for i in 0..max_steps {
        if i >= 1 {
            if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
                let period = quotients.split_off(start);
                return Ok(PeriodicCF {
                    preperiod: quotients,
                    period,
                });
            }
            seen.insert((p.clone(), q.clone()), i);
        }
        let a = if q.is_positive() {
            Integer::div_floor(&(&p + &s), &q)
        } else {
            Integer::div_floor(&(&p + &s + 1), &q)
        };
        quotients.push(a.to_i64().ok_or(Error::Overflow("partial quotient"))?);
        p = &a * &q - &p;
        q = (&big_d - &p * &p) / &q;
    }
    Err(Error::CfBudget { max_steps })
}

/// Convergents `h_n/k_n` for the first `n` partial quotients.
pub fn convergents(cf: &PeriodicCF, n: usize) -> Vec<(BigInt, BigInt)> {
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut out = Vec::with_capacity(n);
    for a in cf.quotients(n) {
        let a = BigInt::from(a);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        out.push((h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    out
}

/// Checks `|x − h/k| < 1/k²` for the last `tail` of the first `n` convergents.
pub fn convergents_approach(x: &QuadSurd, cf: &PeriodicCF, n: usize, tail: usize) -> bool {
    let conv = convergents(cf, n);
    conv.iter().skip(n.saturating_sub(tail)).all(|(h, k)| {
        let approx = QuadSurd::new(h.clone(), 0, 0, k.clone()).expect("positive denominator");
        let diff = x - &approx;
        let err = if diff.signum().is_lt() { -diff } else { diff };
        let bound = QuadSurd::new(1, 0, 0, k * k).expect("positive denominator");
        err < bound
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(x: QuadSurd) -> PeriodicCF {
        cf_expand(&x, 10_000).unwrap()
    }

    #[test]
    fn golden_ratio() {
        let c = cf(QuadSurd::from_parts(1, 1, 5, 2));
        assert_eq!(c.to_string(), "[1; (1)]");
    }

    #[test]
    fn sqrt_two() {
        let c = cf(QuadSurd::from_parts(0, 1, 2, 1));
        assert_eq!((c.preperiod.clone(), c.period.clone()), (vec![1], vec![2]));
    }

    #[test]
    fn negative_and_conjugate() {
        // −√2 = [−2; 1, 1, (2)]
        let c = cf(QuadSurd::from_parts(0, -1, 2, 1));
        assert_eq!(c.a0(), -2);
        assert_eq!(c.quotients(6), vec![-2, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn non_conforming_denominator() {
        // (1+√17)/2 has Q ∤ D − P², forcing the scaled state
        let x = QuadSurd::from_parts(1, 1, 17, 2);
        let c = cf(x.clone());
        assert_eq!(c.to_string(), "[2; (1,1,3)]");
        assert!(convergents_approach(&x, &c, 20, 3));
    }

    #[test]
    fn display_with_preperiod() {
        let c = PeriodicCF {
            preperiod: vec![2, 5],
            period: vec![1, 3],
        };
        assert_eq!(c.to_string(), "[2; 5, (1,3)]");
    }

    #[test]
    fn primitive_period() {
        assert!(PeriodicCF {
            preperiod: vec![1],
            period: vec![1, 2]
        }
        .period_is_primitive());
        assert!(!PeriodicCF {
            preperiod: vec![1],
            period: vec![1, 2, 1, 2]
        }
        .period_is_primitive());
    }

    #[test]
    fn rational_rejected() {
        assert!(cf_expand(&QuadSurd::integer(3), 10).is_err());
    }

    #[test]
    fn budget_error() {
        let x = QuadSurd::from_parts(5, 4, 113, 8);
        assert_eq!(cf_expand(&x, 3), Err(Error::CfBudget { max_steps: 3 }));
    }
}
