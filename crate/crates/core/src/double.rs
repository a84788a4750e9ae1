//! The double sieve: each step deletes both the pointer and its target.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::golden::{initial_capacity, Histogram};
use crate::ground::GroundSequence;
use crate::quad::slopes::{
    double_survivor_slope, double_survivor_slope_compound, double_target_slope, slope_gamma,
};
use crate::working_set::{WorkingSet, DEFAULT_MAX_INDEX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleStep {
    pub n: u64,
    pub pointer: u64,
    pub target: u64,
}

#[derive(Debug, Clone)]
pub struct DoubleTrace {
    pub steps: Vec<DoubleStep>,
    /// Normalized pointers `π_n`.
    pub pointers: Vec<u64>,
    /// Normalized targets `τ_n`.
    pub targets: Vec<u64>,
    /// Normalized survivors `σ_n`.
    pub survivors: Vec<u64>,
    pub a: u64,
    pub b: u64,
}

pub fn run_double(g: &GroundSequence, steps: u64) -> Result<DoubleTrace> {
    run_double_capped(g, steps, DEFAULT_MAX_INDEX)
}

pub fn run_double_capped(g: &GroundSequence, steps: u64, max_index: u64) -> Result<DoubleTrace> {
    let (a, b) = g.progression().ok_or_else(|| {
        Error::UnsupportedGround(format!("double sieve needs an arithmetic ground, got {g}"))
    })?;
    if steps == 0 {
        return Err(Error::Precondition("steps must be positive".into()));
    }
    let mut ws = WorkingSet::with_capacity(initial_capacity(g, steps * 2), max_index);
    let mut trace = DoubleTrace {
        steps: Vec::with_capacity(steps as usize),
        pointers: Vec::with_capacity(steps as usize),
        targets: Vec::with_capacity(steps as usize),
        survivors: Vec::new(),
        a,
        b,
    };
    for n in 1..=steps {
        // Both positions are read from W_{n−1} before anything is removed.
        let kp = ws.select(n)?;
        let pointer = g.term(kp)?;
        let kt = ws.select(pointer)?;
        let target = g.term(kt)?;
        ws.delete_at(pointer)?;
        if pointer != n {
            ws.delete_at(n)?;
        }
        trace.steps.push(DoubleStep { n, pointer, target });
        trace.pointers.push(kp);
        trace.targets.push(kt);
    }
    trace.survivors = (1..=steps).map(|p| ws.select(p)).collect::<Result<_>>()?;
    Ok(trace)
}

/// Max residual of `τ_n = aπ_n + b + 2(n−1)`, or of `τ_n = π_n + 2n − 3`
/// for `n >= 2` on the naturals.
pub fn check_double_rank(trace: &DoubleTrace) -> u64 {
    let degenerate = (trace.a, trace.b) == (1, 0);
    let (a, b) = (trace.a as i128, trace.b as i128);
    trace
        .pointers
        .iter()
        .zip(&trace.targets)
        .enumerate()
        .filter(|(i, _)| !degenerate || *i >= 1)
        .map(|(i, (&p, &t))| {
            let n = i as i128 + 1;
            let want = if degenerate {
                p as i128 + 2 * n - 3
            } else {
                a * p as i128 + b + 2 * (n - 1)
            };
            (t as i128 - want).unsigned_abs() as u64
        })
        .max()
        .unwrap_or(0)
}

/// Pointers, targets and survivors are disjoint and cover `1..=m` for the
/// largest `m` all three lists are complete up to.
pub fn check_three_way(trace: &DoubleTrace) -> bool {
    let m = match (
        trace.survivors.last(),
        trace.targets.last(),
        trace.pointers.last(),
    ) {
        (Some(&s), Some(&t), Some(&p)) => s.min(t).min(p),
        _ => return true,
    };
    let mut seen = vec![0u8; m as usize + 1];
    let mut dup = false;
    for (i, &k) in trace
        .pointers
        .iter()
        .chain(&trace.targets)
        .chain(&trace.survivors)
        .enumerate()
    {
        // the coincident first step on the naturals lists index 1 twice
        let coincident = (trace.a, trace.b) == (1, 0) && k == 1 && i == trace.pointers.len();
        if k <= m && !coincident {
            dup |= seen[k as usize] > 0;
            seen[k as usize] += 1;
        }
    }
    !dup && seen[1..].iter().all(|&c| c == 1)
}

pub fn strictly_increasing(seq: &[u64]) -> bool {
    seq.windows(2).all(|w| w[0] < w[1])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DoubleSlopeReport {
    pub a: u64,
    pub n: usize,
    pub pointer_empirical: f64,
    pub target_empirical: f64,
    pub survivor_empirical: f64,
    pub gamma: String,
    pub target_slope: String,
    pub survivor_slope: String,
    /// The compound survivor expression, which does not match the others.
    pub survivor_compound: String,
}

pub fn double_slope_report(trace: &DoubleTrace) -> DoubleSlopeReport {
    let ratio = |v: &[u64]| v.last().map_or(0.0, |&x| x as f64 / v.len() as f64);
    DoubleSlopeReport {
        a: trace.a,
        n: trace.pointers.len(),
        pointer_empirical: ratio(&trace.pointers),
        target_empirical: ratio(&trace.targets),
        survivor_empirical: ratio(&trace.survivors),
        gamma: slope_gamma(trace.a).to_decimal(10),
        target_slope: double_target_slope(trace.a).to_decimal(10),
        survivor_slope: double_survivor_slope(trace.a).to_decimal(10),
        survivor_compound: double_survivor_slope_compound(trace.a).to_decimal(10),
    }
}

/// Empirical statements about the double sieve that are not proved. Checks
/// here report; they never assert.
pub mod conjectures {
    use super::*;
    use crate::golden::gap_histogram;

    #[derive(Debug, Clone, PartialEq, Eq, Serialize)]
    pub struct InterleavingReport {
        pub n_max: usize,
        /// Steps `n` where `π_n < σ_n < π_{n+1}` fails.
        pub interleaving_failures: Vec<usize>,
        pub pointer_gaps: Histogram,
        pub survivor_gaps: Histogram,
    }

    impl InterleavingReport {
        pub fn interleaving_holds(&self) -> bool {
            self.interleaving_failures.is_empty()
        }

        pub fn gaps_hold(&self) -> bool {
            let two_three = |h: &Histogram| h.keys().copied().collect::<Vec<_>>() == [2, 3];
            two_three(&self.pointer_gaps) && two_three(&self.survivor_gaps)
        }
    }

    pub fn check_interleaving_conjecture(trace: &DoubleTrace, n_max: usize) -> InterleavingReport {
        let n_max = n_max
            .min(trace.survivors.len())
            .min(trace.pointers.len().saturating_sub(1));
        let (pi, sigma) = (&trace.pointers, &trace.survivors);
        let interleaving_failures = (1..=n_max)
            .filter(|&n| !(pi[n - 1] < sigma[n - 1] && sigma[n - 1] < pi[n]))
            .collect();
        InterleavingReport {
            n_max,
            interleaving_failures,
            pointer_gaps: gap_histogram(&pi[..=n_max.min(pi.len() - 1)]),
            survivor_gaps: gap_histogram(&sigma[..n_max]),
        }
    }
}
