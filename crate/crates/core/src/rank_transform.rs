//! Kimberling's rank transform for block inputs and its agreement with the
//! golden sieve on `aN+b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::golden::{normalize, run_golden};
use crate::ground::GroundSequence;

/// A nondecreasing input sequence `u(1), u(2), …` of nonnegative integers.
pub trait RankInput {
    fn term(&self, n: u64) -> u64;
}

impl<F: Fn(u64) -> u64> RankInput for F {
    fn term(&self, n: u64) -> u64 {
        self(n)
    }
}

/// `u_{a,b}(n) = max(0, ⌈(n − b + 1)/a⌉)`: `b − 1` zeros, then `a` copies of
/// each positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockSequence {
    pub a: u64,
    pub b: u64,
}

impl BlockSequence {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Precondition(format!(
                "block sequence needs a >= 1 and b >= 1, got ({a},{b})"
            )));
        }
        Ok(BlockSequence { a, b })
    }
}

impl RankInput for BlockSequence {
    fn term(&self, n: u64) -> u64 {
        let num = n as i64 - self.b as i64 + 1;
        if num <= 0 {
            0
        } else {
            (num as u64).div_ceil(self.a)
        }
    }
}

/// One application of `T_u` to the prefix `r[..n]`.
pub fn apply_t<U: RankInput + ?Sized>(u: &U, r: &[u64], n: usize) -> Vec<u64> {
    let r = &r[..n.min(r.len())];
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(1);
    for m in 2..=n as u64 {
        let (lo, hi) = (u.term(m - 1), u.term(m));
        let count = r
            .partition_point(|&v| v < hi)
            .saturating_sub(r.partition_point(|&v| v < lo));
        out.push(r[m as usize - 2] + count as u64 + 1);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankState {
    pub r: Vec<u64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Iterates `T_u` from `(1, …, n)` until the prefix stops changing.
pub fn fixed_point<U: RankInput + ?Sized>(u: &U, n: usize, max_iter: usize) -> RankState {
    let mut r: Vec<u64> = (1..=n as u64).collect();
    for it in 1..=max_iter {
        let next = apply_t(u, &r, n);
        if next == r {
            return RankState {
                r,
                iterations: it,
                converged: true,
            };
        }
        r = next;
    }
    RankState {
        r,
        iterations: max_iter,
        converged: false,
    }
}

/// `c_n = n + a·r_n + b − 1`.
pub fn companion(r: &[u64], a: u64, b: u64) -> Vec<u64> {
    r.iter()
        .enumerate()
        .map(|(i, &v)| i as u64 + 1 + a * v + b - 1)
        .collect()
}

/// `c_n = n + #{i : u(i) <= r_n}`, counting directly from the input.
/// Inputs must be unbounded; `scan_limit` caps the scan.
pub fn joint_rank_companion<U: RankInput + ?Sized>(
    u: &U,
    r: &[u64],
    scan_limit: u64,
) -> Result<Vec<u64>> {
    let mut i = 0u64;
    let mut out = Vec::with_capacity(r.len());
    for (n, &v) in r.iter().enumerate() {
        while u.term(i + 1) <= v {
            i += 1;
            if i > scan_limit {
                return Err(Error::Precondition(format!(
                    "input stays <= {v} past index {scan_limit}"
                )));
            }
        }
        out.push(n as u64 + 1 + i);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceMismatch {
    pub which: &'static str,
    pub n: usize,
    pub transform: u64,
    pub sieve: u64,
}

/// Compares `(r, c)` with the normalized golden-sieve pair on `aN+b`.
pub fn check_equivalence(a: u64, b: u64, n: usize) -> Result<Option<EquivalenceMismatch>> {
    if a < 2 || b == 0 || b >= a {
        return Err(Error::Precondition(format!(
            "equivalence needs a >= 2 and 1 <= b < a, got ({a},{b})"
        )));
    }
    let u = BlockSequence::new(a, b)?;
    let state = fixed_point(&u, n, 4 * n + 16);
    if !state.converged {
        return Err(Error::Precondition(format!(
            "rank transform did not settle in {} iterations",
            state.iterations
        )));
    }
    let c = companion(&state.r, a, b);
    let pair = normalize(&run_golden(
        &GroundSequence::arith(a, b)?,
        n as u64,
        n as u64,
    )?)?;
    for (which, got, want) in [("r", &state.r, &pair.sigma), ("c", &c, &pair.delta)] {
        if let Some(i) = got
            .iter()
            .zip(want.iter())
            .take(n)
            .position(|(x, y)| x != y)
        {
            return Ok(Some(EquivalenceMismatch {
                which,
                n: i + 1,
                transform: got[i],
                sieve: want[i],
            }));
        }
    }
    Ok(None)
}
