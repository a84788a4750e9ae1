//! Exact quadratic surds, their continued fractions, and the slope catalogue.

pub mod cf;
pub mod slopes;
pub mod surd;

use serde::Serialize;

pub use cf::{cf_expand, PeriodicCF};
pub use surd::{QuadSurd, Quadratic};

use crate::error::Result;

pub const DEFAULT_CF_STEPS: usize = 100_000;

/// One row of a continued-fraction report.
#[derive(Debug, Clone, Serialize)]
pub struct CfRow {
    pub a: u64,
    pub value: String,
    pub preperiod: String,
    pub period: String,
    pub period_length: usize,
}

impl CfRow {
    pub fn new(a: u64, x: &QuadSurd, cf: &PeriodicCF) -> Self {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        CfRow {
            a,
            value: x.to_decimal(12),
            preperiod: join(&cf.preperiod),
            period: join(&cf.period),
            period_length: cf.period.len(),
        }
    }
}

pub fn cf_rows_csv(rows: &[CfRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfCheck {
    pub family: &'static str,
    pub param: u64,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CfFamilyReport {
    pub checks: Vec<CfCheck>,
}

impl CfFamilyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CfCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Same infinite quotient sequence, regardless of how the cycle is written.
fn same_expansion(got: &PeriodicCF, want: &PeriodicCF) -> bool {
    let n =
        got.preperiod.len().max(want.preperiod.len()) + 2 * got.period.len() * want.period.len();
    got.quotients(n) == want.quotients(n)
}

/// Expected tail exponents for `a = 2^k`: `e_{2i} = i+1`, `e_{2i+1} = k−1−i`.
pub fn zipper_exponents(k: u32) -> Vec<u32> {
    (0..k.saturating_sub(1))
        .flat_map(|i| [i + 1, k - 1 - i])
        .collect()
}

/// Checks the stated continued-fraction families for `a <= a_max` and the
/// power-of-two periods for `k <= k_max`.
pub fn check_cf_families(a_max: u64, k_max: u32) -> Result<CfFamilyReport> {
    let mut report = CfFamilyReport::default();
    let mut push = |family, param, ok, detail: String| {
        report.checks.push(CfCheck {
            family,
            param,
            ok,
            detail,
        })
    };

    for a in 1..=a_max {
        let ai = a as i64;
        let alpha = cf_expand(&slopes::slope_alpha(a), DEFAULT_CF_STEPS)?;
        let want = PeriodicCF {
            preperiod: vec![1],
            period: vec![ai, 1],
        };
        push("alpha", a, same_expansion(&alpha, &want), alpha.to_string());

        let beta = cf_expand(&slopes::deletion_slope(a), DEFAULT_CF_STEPS)?;
        let want = PeriodicCF {
            preperiod: vec![ai + 1],
            period: vec![1, ai],
        };
        push(
            "deletion-slope",
            a,
            same_expansion(&beta, &want),
            beta.to_string(),
        );

        let gamma = cf_expand(&slopes::slope_gamma(a), DEFAULT_CF_STEPS)?;
        let lead = gamma.quotients(4);
        push(
            "gamma-leading",
            a,
            lead == [2, ai, 1, 2 * ai + 1],
            format!("{lead:?}"),
        );
    }

    let g1 = cf_expand(&slopes::slope_gamma(1), DEFAULT_CF_STEPS)?;
    let want = PeriodicCF {
        preperiod: vec![2],
        period: vec![1, 1, 3],
    };
    push("gamma-one", 1, g1 == want, g1.to_string());

    for k in 1..=k_max {
        let a = 1u64 << k;
        let ai = a as i64;
        let g = cf_expand(&slopes::slope_gamma(a), DEFAULT_CF_STEPS)?;
        let len_ok = g.period.len() == 2 * k as usize + 3;
        let head_ok = g.period.len() >= 5 && g.period[..5] == [ai, 1, 2 * ai + 1, 1, ai];
        let tail = g.period.get(5..).unwrap_or(&[]);
        let tail_ok = tail.iter().all(|t| *t > 0 && (*t as u64).is_power_of_two())
            && tail
                .iter()
                .map(|t| t.trailing_zeros())
                .eq(zipper_exponents(k));
        push(
            "powers-of-two",
            a,
            len_ok && head_ok && tail_ok && g.a0() == 2,
            g.to_string(),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(x: QuadSurd) -> PeriodicCF {
        cf_expand(&x, DEFAULT_CF_STEPS).unwrap()
    }

    #[test]
    fn named_expansions() {
        assert_eq!(expand(slopes::slope_alpha(3)).to_string(), "[1; (3,1)]");
        assert_eq!(
            expand(slopes::slope_gamma(4)).to_string(),
            "[2; (4,1,9,1,4,2,2)]"
        );
        assert_eq!(
            expand(slopes::slope_gamma(8)).period,
            vec![8, 1, 17, 1, 8, 2, 4, 4, 2]
        );
        let g32 = expand(slopes::slope_gamma(32));
        assert_eq!(g32.period.len(), 13);
        assert_eq!(g32.period[5..], [2, 16, 4, 8, 8, 4, 16, 2]);
        assert_eq!(expand(slopes::slope_gamma(12)).period.len(), 36);
    }

    #[test]
    fn zipper() {
        assert_eq!(zipper_exponents(2), vec![1, 1]);
        assert_eq!(zipper_exponents(5), vec![1, 4, 2, 3, 3, 2, 4, 1]);
        assert!(zipper_exponents(1).is_empty());
    }

    #[test]
    fn families_hold() {
        let report = check_cf_families(20, 10).unwrap();
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn csv_rows() {
        let x = slopes::slope_gamma(4);
        let text = cf_rows_csv(&[CfRow::new(4, &x, &expand(x.clone()))]);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("a,value,preperiod,period,period_length"));
        assert_eq!(lines.next(), Some("4,2.203768226592,2,4 1 9 1 4 2 2,7"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn convergents_approach_value(p in -30i64..30, q in 1i64..6, d in 2u64..60, r in 1i64..20) {
                let x = QuadSurd::from_parts(p, q, d, r);
                prop_assume!(!x.is_rational());
                let c = cf_expand(&x, DEFAULT_CF_STEPS).unwrap();
                prop_assert!(c.period_is_primitive());
                prop_assert!(cf::convergents_approach(&x, &c, 25, 3));
            }
        }
    }
}
