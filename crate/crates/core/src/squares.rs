//! The golden sieve on the perfect squares, in root coordinates.

use std::collections::BTreeMap;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::golden::{gap_histogram, run_golden_capped, Histogram};
use crate::ground::GroundSequence;
use crate::working_set::DEFAULT_MAX_INDEX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquaresTrace {
    /// Survivor roots `μ_n`.
    pub mu: Vec<u64>,
    /// Deletion roots `λ_n`.
    pub lambda: Vec<u64>,
}

pub fn run_squares(n: u64) -> Result<SquaresTrace> {
    run_squares_with(n, n)
}

/// `steps` deletions and at least `survivors` survivor roots.
pub fn run_squares_with(steps: u64, survivors: u64) -> Result<SquaresTrace> {
    run_squares_capped(steps, survivors, DEFAULT_MAX_INDEX)
}

pub fn run_squares_capped(steps: u64, survivors: u64, max_index: u64) -> Result<SquaresTrace> {
    let trace = run_golden_capped(&GroundSequence::Squares, steps, survivors, max_index)?;
    let root = |v: &u64| -> Result<u64> {
        let r = v.sqrt();
        (r * r == *v)
            .then_some(r)
            .ok_or_else(|| Error::Precondition(format!("{v} is not a perfect square")))
    };
    Ok(SquaresTrace {
        mu: trace.survivors.iter().map(root).collect::<Result<_>>()?,
        lambda: trace.deletions.iter().map(root).collect::<Result<_>>()?,
    })
}

/// Max `|λ_n − μ_n² − (n−1)|` over `n >= 2`.
pub fn check_squares_rank(t: &SquaresTrace) -> u64 {
    t.mu.iter()
        .zip(&t.lambda)
        .enumerate()
        .skip(1)
        .map(|(i, (&m, &l))| {
            (l as i128 - (m as i128 * m as i128) - i as i128).unsigned_abs() as u64
        })
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NestedReport {
    pub max_residual: u64,
    pub checked: usize,
    pub skipped: usize,
}

/// `μ_{μ_n² − 1} = μ_n² + n − 2` for `n >= 2` wherever the index is computed.
pub fn check_nested_identity(t: &SquaresTrace) -> NestedReport {
    let mut r = NestedReport {
        max_residual: 0,
        checked: 0,
        skipped: 0,
    };
    for (i, &m) in t.mu.iter().enumerate().skip(1) {
        let n = i as u64 + 1;
        let idx = (m * m - 1) as usize;
        match t.mu.get(idx - 1) {
            Some(&v) => {
                r.max_residual = r.max_residual.max(v.abs_diff(m * m + n - 2));
                r.checked += 1;
            }
            None => r.skipped += 1,
        }
    }
    r
}

/// Gap `μ_n − μ_{n−1}` is 2 exactly when `n` is in `{μ_m² : m >= 2}`. Checks
/// every `2 <= n <= n_max` for which membership is decided by the computed
/// roots; returns the first violation.
pub fn check_meta_hiccup(t: &SquaresTrace, n_max: u64) -> Option<u64> {
    let last = *t.mu.last()?;
    let horizon = n_max.min(t.mu.len() as u64).min(last.saturating_mul(last));
    let shadow: std::collections::HashSet<u64> = t.mu.iter().skip(1).map(|m| m * m).collect();
    (2..=horizon).find(|&n| {
        let gap = t.mu[n as usize - 1] - t.mu[n as usize - 2];
        gap != if shadow.contains(&n) { 2 } else { 1 }
    })
}

/// Alternating sum of iterated integer square roots, stopping once the next
/// root would fall below 2.
pub fn tower_f(m: u64) -> i64 {
    let mut sum = 0i64;
    let mut x = m;
    let mut sign = 1i64;
    loop {
        sum += sign * x as i64;
        let r = x.sqrt();
        if r < 2 {
            return sum;
        }
        x = r;
        sign = -sign;
    }
}

/// Number of survivor roots `<= x`.
pub fn survivor_count(t: &SquaresTrace, x: u64) -> u64 {
    t.mu.partition_point(|&m| m <= x) as u64
}

/// Number of deletion roots `<= x`.
pub fn deletion_count(t: &SquaresTrace, x: u64) -> u64 {
    t.lambda.partition_point(|&l| l <= x) as u64
}

/// Steps `n >= 2` where `μ_n = n + S(⌊√n⌋)` fails.
pub fn counting_identity_failures(t: &SquaresTrace) -> Vec<u64> {
    (2..=t.mu.len() as u64)
        .filter(|&n| t.mu[n as usize - 1] != n + survivor_count(t, n.sqrt()))
        .collect()
}

/// `S(x) + D(x) = x` for every `x` both counts are complete up to.
pub fn check_counting_consistency(t: &SquaresTrace) -> Option<u64> {
    let horizon = match (t.mu.last(), t.lambda.last()) {
        (Some(&m), Some(&l)) => m.min(l),
        _ => return None,
    };
    (1..=horizon).find(|&x| survivor_count(t, x) + deletion_count(t, x) != x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub n_max: u64,
    /// `ε_n = μ_n − n − f(⌊√n⌋)` counts for `4 <= n <= n_max`.
    pub histogram: BTreeMap<i64, usize>,
    /// First `n` with `ε_n` outside `{0, 1}`.
    pub first_outside: Option<u64>,
}

impl TowerReport {
    pub fn holds(&self) -> bool {
        self.first_outside.is_none()
    }
}

pub fn check_tower_residuals(t: &SquaresTrace, n_max: u64) -> TowerReport {
    let n_max = n_max.min(t.mu.len() as u64);
    let mut histogram = BTreeMap::new();
    let mut first_outside = None;
    for n in 4..=n_max {
        let eps = t.mu[n as usize - 1] as i64 - n as i64 - tower_f(n.sqrt());
        *histogram.entry(eps).or_default() += 1;
        if first_outside.is_none() && !(0..=1).contains(&eps) {
            first_outside = Some(n);
        }
    }
    TowerReport {
        n_max,
        histogram,
        first_outside,
    }
}

/// Survivor-root gap histogram; supported on `{1, 2}` by the two-gap property.
pub fn mu_gaps(t: &SquaresTrace) -> Histogram {
    gap_histogram(&t.mu)
}
