//! Hiccup recurrences and the extraction sieve that produces them.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::GroundSequence;

pub use crate::quad::slopes::extraction_slope;

/// Parameters of a `(j, x, y, z)`-hiccup: start at `x`, then step by `y`
/// when `m − j` is already a value and by `z` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HiccupParams {
    pub j: u64,
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl HiccupParams {
    pub fn new(j: u64, x: u64, y: u64, z: u64) -> Result<Self> {
        if y == 0 || z == 0 {
            return Err(Error::Precondition("gaps must be positive".into()));
        }
        if y == z {
            return Err(Error::Precondition(format!(
                "gaps must differ, got y = z = {y}"
            )));
        }
        Ok(HiccupParams { j, x, y, z })
    }
}

/// Presence map over generated values.
#[derive(Debug, Clone, Default)]
pub struct MembershipIndex {
    present: Vec<bool>,
}

impl MembershipIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: u64) {
        let i = v as usize;
        if i >= self.present.len() {
            self.present
                .resize((i + 1).max(self.present.len() * 2), false);
        }
        self.present[i] = true;
    }

    /// Nonpositive arguments are never members.
    pub fn contains(&self, v: i64) -> bool {
        v > 0 && self.present.get(v as usize).copied().unwrap_or(false)
    }
}

pub fn hiccup_generate(p: &HiccupParams, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let mut seen = MembershipIndex::new();
    let mut x = p.x;
    out.push(x);
    seen.insert(x);
    for m in 2..=n as i64 {
        x += if seen.contains(m - p.j as i64) {
            p.y
        } else {
            p.z
        };
        out.push(x);
        seen.insert(x);
    }
    out
}

/// One step of the extraction sieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtractionStep {
    pub n: u64,
    pub survivor: u64,
    /// Test argument `t = n + 1 − j`.
    pub probe: i64,
    pub member: bool,
    /// Elements consumed this step, the survivor included.
    pub consumed: u64,
}

fn extra_deletion(y: u64, z: u64, member: bool) -> bool {
    (y > z && member) || (y < z && !member)
}

/// Source of minima for the extraction sieve.
trait Minima {
    fn pop(&mut self) -> Result<u64>;
    fn skip(&mut self, count: u64) -> Result<()>;
}

/// Fast path: on any ground the remaining working set is a tail, so a
/// cursor into the ground suffices.
struct Cursor<'a> {
    g: &'a GroundSequence,
    k: u64,
}

impl Minima for Cursor<'_> {
    fn pop(&mut self) -> Result<u64> {
        self.k += 1;
        self.g.term(self.k)
    }
    fn skip(&mut self, count: u64) -> Result<()> {
        self.k += count;
        if let Some(len) = self.g.len() {
            if self.k > len as u64 {
                return Err(Error::BoundedPrefix {
                    len,
                    requested: self.k,
                });
            }
        }
        Ok(())
    }
}

/// Literal path: an explicit queue of remaining elements, refilled from the ground.
struct Queue<'a> {
    g: &'a GroundSequence,
    next: u64,
    items: VecDeque<u64>,
}

impl Queue<'_> {
    fn fill(&mut self, want: u64) -> Result<()> {
        while (self.items.len() as u64) < want {
            self.next += 1;
            self.items.push_back(self.g.term(self.next)?);
        }
        Ok(())
    }
}

impl Minima for Queue<'_> {
    fn pop(&mut self) -> Result<u64> {
        self.fill(1)?;
        Ok(self.items.pop_front().expect("filled"))
    }
    fn skip(&mut self, count: u64) -> Result<()> {
        self.fill(count)?;
        self.items.drain(..count as usize);
        Ok(())
    }
}

fn run_extraction<M: Minima>(
    j: u64,
    y: u64,
    z: u64,
    src: &mut M,
    n: usize,
) -> Result<Vec<ExtractionStep>> {
    HiccupParams::new(j, 1, y, z)?;
    let m = y.min(z) - 1;
    let d = y.abs_diff(z);
    let mut seen = MembershipIndex::new();
    let mut steps = Vec::with_capacity(n);
    for n in 1..=n as u64 {
        let survivor = src.pop()?;
        seen.insert(survivor);
        let probe = n as i64 + 1 - j as i64;
        let member = seen.contains(probe);
        let extra = if extra_deletion(y, z, member) { d } else { 0 };
        steps.push(ExtractionStep {
            n,
            survivor,
            probe,
            member,
            consumed: 1 + m + extra,
        });
        // The last step's trailing deletions are never observed; skip them
        // anyway so bounded grounds fail at the same point on both paths.
        src.skip(m + extra)?;
    }
    Ok(steps)
}

/// Step-by-step record of `C_{j,y,z}` on `g`.
pub fn extraction_trace(
    j: u64,
    y: u64,
    z: u64,
    g: &GroundSequence,
    n: usize,
) -> Result<Vec<ExtractionStep>> {
    run_extraction(j, y, z, &mut Cursor { g, k: 0 }, n)
}

/// The first `n` outputs of `C_{j,y,z}` on `g`.
pub fn extraction_run(j: u64, y: u64, z: u64, g: &GroundSequence, n: usize) -> Result<Vec<u64>> {
    Ok(extraction_trace(j, y, z, g, n)?
        .into_iter()
        .map(|s| s.survivor)
        .collect())
}

/// Same as [`extraction_run`], removing minima from an explicit queue.
pub fn extraction_run_literal(
    j: u64,
    y: u64,
    z: u64,
    g: &GroundSequence,
    n: usize,
) -> Result<Vec<u64>> {
    let mut q = Queue {
        g,
        next: 0,
        items: VecDeque::new(),
    };
    Ok(run_extraction(j, y, z, &mut q, n)?
        .into_iter()
        .map(|s| s.survivor)
        .collect())
}

/// Checks that after every step on `aN+b` the queue minimum equals
/// `s_n + a·consumed_n`. Returns the first failing step.
pub fn check_half_line(j: u64, y: u64, z: u64, a: u64, b: u64, n: usize) -> Result<Option<u64>> {
    let g = GroundSequence::arith(a, b)?;
    let mut q = Queue {
        g: &g,
        next: 0,
        items: VecDeque::new(),
    };
    let steps = run_extraction(j, y, z, &mut q, n)?;
    let mut q = Queue {
        g: &g,
        next: 0,
        items: VecDeque::new(),
    };
    for s in &steps {
        q.pop()?;
        q.skip(s.consumed - 1)?;
        q.fill(1)?;
        if q.items[0] != s.survivor + a * s.consumed {
            return Ok(Some(s.n));
        }
    }
    Ok(None)
}

/// `(j, x, y, z) ↦ (j, a·x + b, a·y, a·z)`.
pub fn affine_transform(p: &HiccupParams, a: u64, b: u64) -> Result<HiccupParams> {
    if a == 0 || b >= a {
        return Err(Error::Precondition(format!(
            "affine map needs 0 <= b < a, got a = {a}, b = {b}"
        )));
    }
    Ok(HiccupParams {
        j: p.j,
        x: a * p.x + b,
        y: a * p.y,
        z: a * p.z,
    })
}

/// First 1-based index where the extraction sieve on `aN+b` differs from the
/// transformed hiccup on the naturals.
pub fn check_extraction_equiv(
    j: u64,
    y: u64,
    z: u64,
    a: u64,
    b: u64,
    n: usize,
) -> Result<Option<usize>> {
    let lhs = extraction_run(j, y, z, &GroundSequence::arith(a, b)?, n)?;
    let rhs = hiccup_generate(&affine_transform(&HiccupParams::new(j, 1, y, z)?, a, b)?, n);
    Ok(lhs
        .iter()
        .zip(&rhs)
        .position(|(l, r)| l != r)
        .map(|i| i + 1))
}
