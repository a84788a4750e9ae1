//! The golden sieve: read the `n`-th working entry as a position and delete
//! the entry found there.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::GroundSequence;
use crate::quad::slopes::phi;
use crate::quad::QuadSurd;
use crate::working_set::{WorkingSet, DEFAULT_MAX_INDEX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub n: u64,
    pub pointer: u64,
    pub deletion: u64,
}

#[derive(Debug, Clone)]
pub struct SieveTrace {
    pub steps: Vec<StepRecord>,
    /// Stabilized survivors `s_1, s_2, …`.
    pub survivors: Vec<u64>,
    /// Deletions `d_1, …, d_N` in step order.
    pub deletions: Vec<u64>,
    /// Ground indices of `survivors`.
    pub survivor_index: Vec<u64>,
    /// Ground indices of `deletions`.
    pub deletion_index: Vec<u64>,
    pub ground: GroundSequence,
}

impl SieveTrace {
    pub fn pointers(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.pointer).collect()
    }
}

pub fn run_golden(g: &GroundSequence, steps: u64, survivor_target: u64) -> Result<SieveTrace> {
    run_golden_capped(g, steps, survivor_target, DEFAULT_MAX_INDEX)
}

/// As [`run_golden`] with an explicit working-set cap.
///
/// The run performs `max(steps, survivor_target)` steps; step `m` only
/// touches positions `>= m`, so after `T` steps the first `T` working
/// entries are final and are emitted as survivors.
pub fn run_golden_capped(
    g: &GroundSequence,
    steps: u64,
    survivor_target: u64,
    max_index: u64,
) -> Result<SieveTrace> {
    if steps == 0 || survivor_target == 0 {
        return Err(Error::Precondition(
            "steps and survivor target must be positive".into(),
        ));
    }
    let total = steps.max(survivor_target);
    let mut ws = WorkingSet::with_capacity(initial_capacity(g, total), max_index);
    let mut records = Vec::with_capacity(steps as usize);
    let mut deletion_index = Vec::with_capacity(steps as usize);
    for n in 1..=total {
        let pointer = g.term(ws.select(n)?)?;
        let k = ws.delete_at(pointer)?;
        if n <= steps {
            records.push(StepRecord {
                n,
                pointer,
                deletion: g.term(k)?,
            });
            deletion_index.push(k);
        }
    }
    let survivor_index = (1..=total)
        .map(|p| ws.select(p))
        .collect::<Result<Vec<_>>>()?;
    let survivors = survivor_index
        .iter()
        .map(|&k| g.term(k))
        .collect::<Result<Vec<_>>>()?;
    Ok(SieveTrace {
        deletions: records.iter().map(|r| r.deletion).collect(),
        steps: records,
        survivors,
        survivor_index,
        deletion_index,
        ground: g.clone(),
    })
}

/// Rough horizon so that typical runs never regrow.
pub(crate) fn initial_capacity(g: &GroundSequence, steps: u64) -> u64 {
    let lin = match g {
        GroundSequence::Arith { a, .. } => a.saturating_add(2),
        GroundSequence::Squares => steps.saturating_mul(4),
        _ => 3,
    };
    steps.saturating_mul(lin).saturating_add(64).min(1 << 26)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedPair {
    pub sigma: Vec<u64>,
    pub delta: Vec<u64>,
    pub a: u64,
    pub b: u64,
}

/// Maps `an+b ↦ n` over survivors and deletions.
pub fn normalize(trace: &SieveTrace) -> Result<NormalizedPair> {
    let (a, b) = trace.ground.progression().ok_or_else(|| {
        Error::UnsupportedGround(format!("{} is not an arithmetic progression", trace.ground))
    })?;
    let unmap = |v: &u64| -> Result<u64> {
        let w = v.checked_sub(b).filter(|w| w % a == 0);
        w.map(|w| w / a)
            .ok_or_else(|| Error::Precondition(format!("{v} is not of the form {a}n+{b}")))
    };
    Ok(NormalizedPair {
        sigma: trace.survivors.iter().map(unmap).collect::<Result<_>>()?,
        delta: trace.deletions.iter().map(unmap).collect::<Result<_>>()?,
        a,
        b,
    })
}

fn abs_diff(x: i128, y: i128) -> u64 {
    (x - y).unsigned_abs() as u64
}

/// Max over `n` of `|δ_n − (aσ_n + n + b − 1)|`.
pub fn check_rank_identity(pair: &NormalizedPair) -> Result<u64> {
    if (pair.a, pair.b) == (1, 0) {
        return Err(Error::Precondition(
            "rank identity excludes (a,b) = (1,0)".into(),
        ));
    }
    let (a, b) = (pair.a as i128, pair.b as i128);
    Ok(pair
        .sigma
        .iter()
        .zip(&pair.delta)
        .enumerate()
        .map(|(i, (&s, &d))| abs_diff(d as i128, a * s as i128 + i as i128 + 1 + b - 1))
        .max()
        .unwrap_or(0))
}

pub type Histogram = BTreeMap<u64, usize>;

pub fn gap_histogram(seq: &[u64]) -> Histogram {
    let mut h = Histogram::new();
    for w in seq.windows(2) {
        *h.entry(w[1] - w[0]).or_default() += 1;
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoGapReport {
    pub sigma_gaps: Histogram,
    pub delta_gaps: Histogram,
    pub holds: bool,
}

/// Survivor gaps in `{1, 2}` and deletion gaps in `{a+1, 2a+1}`.
pub fn check_two_gap(pair: &NormalizedPair) -> Result<TwoGapReport> {
    if pair.a < 2 {
        return Err(Error::Precondition("two-gap check needs a >= 2".into()));
    }
    let sigma_gaps = gap_histogram(&pair.sigma);
    let delta_gaps = gap_histogram(&pair.delta);
    let holds = sigma_gaps.keys().all(|g| [1, 2].contains(g))
        && delta_gaps
            .keys()
            .all(|g| [pair.a + 1, 2 * pair.a + 1].contains(g));
    Ok(TwoGapReport {
        sigma_gaps,
        delta_gaps,
        holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SelfRefReport {
    pub max_residual: u64,
    pub checked: usize,
    pub skipped: usize,
}

/// `σ_{aσ_n + c} = aσ_n + n + c − 1` with `c = b − 1`, for `2 <= n <= n_max`.
pub fn check_selfref_identity(pair: &NormalizedPair, n_max: usize) -> Result<SelfRefReport> {
    if pair.a < 2 {
        return Err(Error::Precondition(
            "self-referential identity needs a >= 2".into(),
        ));
    }
    let a = pair.a as i128;
    let c = pair.b as i128 - 1;
    let mut report = SelfRefReport {
        max_residual: 0,
        checked: 0,
        skipped: 0,
    };
    for n in 2..=n_max.min(pair.sigma.len()) {
        let s = pair.sigma[n - 1] as i128;
        let idx = a * s + c;
        match usize::try_from(idx)
            .ok()
            .filter(|&i| i >= 1 && i <= pair.sigma.len())
        {
            Some(i) => {
                let want = a * s + n as i128 + c - 1;
                report.max_residual = report
                    .max_residual
                    .max(abs_diff(pair.sigma[i - 1] as i128, want));
                report.checked += 1;
            }
            None => report.skipped += 1,
        }
    }
    Ok(report)
}

/// `s_n = ⌊(n−1)φ⌋ + 2` for the sieve on the naturals.
pub fn survivors_beatty_naturals(n: u64) -> u64 {
    let x = &phi() * (n as i64 - 1);
    x.to_i64_floor().expect("small floor") as u64 + 2
}

/// `s_n` for all `n <= len`, with the surd built once.
pub fn survivors_beatty_prefix(len: u64) -> Vec<u64> {
    let phi = phi();
    (1..=len)
        .map(|n| (&phi * (n as i64 - 1)).to_i64_floor().expect("small floor") as u64 + 2)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FibonacciRow {
    pub k: u32,
    pub f_k: u64,
    pub s_f_k: u64,
    pub f_next: u64,
}

impl FibonacciRow {
    pub fn holds(&self) -> bool {
        self.s_f_k == self.f_next
    }
}

/// `s(F_k) = F_{k+1}` for `2 <= k <= k_max`.
pub fn check_fibonacci_invariance(k_max: u32) -> Vec<FibonacciRow> {
    let mut fib = vec![0u64, 1, 1];
    while fib.len() <= k_max as usize + 1 {
        let n = fib.len();
        fib.push(fib[n - 1] + fib[n - 2]);
    }
    (2..=k_max)
        .map(|k| {
            let f_k = fib[k as usize];
            FibonacciRow {
                k,
                f_k,
                s_f_k: survivors_beatty_naturals(f_k),
                f_next: fib[k as usize + 1],
            }
        })
        .collect()
}

/// Max `|δ_n − (aσ_n + n)|` on the ground `aN+1`.
pub fn check_p_positions(a: u64, n_max: u64) -> Result<u64> {
    let trace = run_golden(&GroundSequence::arith(a, 1)?, n_max, n_max)?;
    let pair = normalize(&trace)?;
    let a = a as i128;
    Ok(pair
        .sigma
        .iter()
        .zip(&pair.delta)
        .enumerate()
        .map(|(i, (&s, &d))| abs_diff(d as i128, a * s as i128 + i as i128 + 1))
        .max()
        .unwrap_or(0))
}

/// First step `n >= from` where the pointer differs from the `n`-th survivor.
pub fn check_pointer_survivor(trace: &SieveTrace, from: u64) -> Option<u64> {
    trace
        .steps
        .iter()
        .filter(|r| r.n >= from)
        .take_while(|r| (r.n as usize) <= trace.survivors.len())
        .find(|r| r.pointer != trace.survivors[r.n as usize - 1])
        .map(|r| r.n)
}

/// Survivor and deletion indices are disjoint and together cover `1..=m`,
/// where `m` is the largest index both lists are complete up to.
pub fn check_partition(trace: &SieveTrace) -> bool {
    let m = match (
        trace.survivor_index.last(),
        trace.deletion_index.iter().max(),
    ) {
        (Some(&s), Some(&d)) => s.min(d),
        _ => return true,
    };
    let mut seen = vec![false; m as usize + 1];
    for &k in trace.survivor_index.iter().chain(&trace.deletion_index) {
        if k <= m {
            if seen[k as usize] {
                return false;
            }
            seen[k as usize] = true;
        }
    }
    seen[1..].iter().all(|&b| b)
}

/// `σ_N / N` against the exact slope, as `(empirical, theoretical)`.
pub fn slope_gap(sigma: &[u64], slope: &QuadSurd) -> (f64, f64) {
    let n = sigma.len();
    let emp = if n == 0 {
        0.0
    } else {
        sigma[n - 1] as f64 / n as f64
    };
    (emp, slope.to_f64())
}
