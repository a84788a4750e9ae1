//! Slow, literal reference implementations of the sieves and the integer
//! arithmetic around them.
//!
//! Everything works on plain `Vec`s and exact integers, straight from the
//! definitions. Nothing here depends on `sieve-core`; the two are compared in
//! tests.

use std::collections::{HashMap, HashSet};

/// Working list that pulls further ground terms on demand.
struct List<F: Fn(u64) -> u64> {
    items: Vec<u64>,
    next: u64,
    ground: F,
}

impl<F: Fn(u64) -> u64> List<F> {
    fn new(ground: F) -> Self {
        List {
            items: Vec::new(),
            next: 1,
            ground,
        }
    }

    fn reach(&mut self, pos: usize) {
        while self.items.len() < pos {
            self.items.push((self.ground)(self.next));
            self.next += 1;
        }
    }

    fn get(&mut self, pos: u64) -> u64 {
        self.reach(pos as usize);
        self.items[pos as usize - 1]
    }

    fn remove(&mut self, pos: u64) -> u64 {
        self.reach(pos as usize);
        self.items.remove(pos as usize - 1)
    }
}

/// Golden sieve by literal list deletion. Returns `(survivors, deletions)`,
/// `steps` of each.
pub fn golden(ground: impl Fn(u64) -> u64, steps: u64) -> (Vec<u64>, Vec<u64>) {
    let mut w = List::new(ground);
    let mut del = Vec::new();
    for n in 1..=steps {
        let p = w.get(n);
        del.push(w.remove(p));
    }
    w.reach(steps as usize);
    (w.items[..steps as usize].to_vec(), del)
}

/// Double sieve by literal list deletion. Returns raw `(pointers, targets, survivors)`.
pub fn double(ground: impl Fn(u64) -> u64, steps: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut w = List::new(ground);
    let (mut hs, mut ds) = (Vec::new(), Vec::new());
    for n in 1..=steps {
        let h = w.get(n);
        let d = w.get(h);
        // remove the larger position first so the smaller one stays valid
        w.remove(h.max(n));
        if h != n {
            w.remove(h.min(n));
        }
        hs.push(h);
        ds.push(d);
    }
    w.reach(steps as usize);
    (hs, ds, w.items[..steps as usize].to_vec())
}

/// Hiccup sequence straight from the recurrence, with a set for membership.
pub fn hiccup(j: u64, x: u64, y: u64, z: u64, n: usize) -> Vec<u64> {
    let mut out = vec![x];
    let mut seen: HashSet<u64> = HashSet::from([x]);
    for m in 2..=n as i64 {
        let t = m - j as i64;
        let last = *out.last().unwrap();
        let next = last
            + if t > 0 && seen.contains(&(t as u64)) {
                y
            } else {
                z
            };
        out.push(next);
        seen.insert(next);
    }
    out.truncate(n);
    out
}

/// Extraction sieve by literally removing minima from a sorted list.
pub fn extraction(j: u64, y: u64, z: u64, ground: impl Fn(u64) -> u64, n: usize) -> Vec<u64> {
    let m = y.min(z) - 1;
    let d = y.abs_diff(z);
    let mut w = List::new(ground);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for step in 1..=n as i64 {
        let s = w.remove(1);
        out.push(s);
        seen.insert(s);
        for _ in 0..m {
            w.remove(1);
        }
        let t = step + 1 - j as i64;
        let member = t > 0 && seen.contains(&(t as u64));
        if (y > z && member) || (y < z && !member) {
            for _ in 0..d {
                w.remove(1);
            }
        }
    }
    out
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `⌊(p + q√d)/r⌋` for `r > 0`, exactly.
pub fn floor_surd(p: i128, q: i128, d: u128, r: i128) -> i128 {
    assert!(r > 0);
    let s = q.unsigned_abs() * q.unsigned_abs() * d;
    let root = isqrt(s) as i128;
    // ⌊q√d⌋: the ceiling for negative q unless exact
    let fl = if q >= 0 {
        root
    } else if (root as u128) * (root as u128) == s {
        -root
    } else {
        -root - 1
    };
    (p + fl).div_euclid(r)
}

/// `⌊(n−1)φ⌋ + 2`.
pub fn golden_beatty(n: u64) -> u64 {
    let m = n as i128 - 1;
    floor_surd(m, m, 5, 2) as u64 + 2
}

/// Lower Wythoff `⌊nφ⌋`.
pub fn lower_wythoff(n: u64) -> u64 {
    floor_surd(n as i128, n as i128, 5, 2) as u64
}

/// Continued fraction of `(p + √d)/r`, `d` not a square. Returns the leading
/// terms before the first repeated complete quotient and the period.
pub fn cf(p: i128, d: i128, r: i128) -> (Vec<i128>, Vec<i128>) {
    // rescale so that r | d − p²
    let (mut pp, mut dd, mut qq) = (p, d, r);
    if (dd - pp * pp) % qq != 0 {
        pp *= qq.abs();
        dd *= qq * qq;
        qq *= qq.abs();
    }
    let sd = isqrt(dd as u128) as i128;
    let mut seen: HashMap<(i128, i128), usize> = HashMap::new();
    let mut terms = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(pp, qq)) {
            let period = terms[start..].to_vec();
            terms.truncate(start);
            return (terms, period);
        }
        seen.insert((pp, qq), terms.len());
        let a = if qq > 0 {
            (pp + sd).div_euclid(qq)
        } else {
            -((pp + sd).div_euclid(-qq) + 1)
        };
        terms.push(a);
        pp = a * qq - pp;
        qq = (dd - pp * pp) / qq;
        assert!(terms.len() < 100_000, "no period found");
    }
}

/// Number of distinct factors of length `n`.
pub fn factor_count(bits: &[u8], n: usize) -> usize {
    bits.windows(n).collect::<HashSet<_>>().len()
}

/// Gap word of a sequence in units of `base`: 0 for `base`, 1 for `2·base`.
pub fn gap_bits(seq: &[u64], base: u64) -> Vec<u8> {
    seq.windows(2)
        .map(|w| match w[1] - w[0] {
            g if g == base => 0,
            g if g == 2 * base => 1,
            g => panic!("gap {g} outside {{{base}, {}}}", 2 * base),
        })
        .collect()
}

/// `f(m) = m − ⌊√m⌋ + ⌊m^{1/4}⌋ − …` while the iterated root stays `>= 2`.
pub fn root_tower(m: u64) -> i64 {
    let mut terms = vec![m];
    loop {
        let r = isqrt(*terms.last().unwrap() as u128) as u64;
        if r < 2 {
            break;
        }
        terms.push(r);
    }
    terms
        .iter()
        .enumerate()
        .map(|(i, &t)| if i % 2 == 0 { t as i64 } else { -(t as i64) })
        .sum()
}

/// Sorted-`Vec` model of the working set: present indices `1..=cap`, all
/// larger indices implicitly present.
pub struct ListModel {
    pub present: Vec<u64>,
    pub cap: u64,
}

impl ListModel {
    pub fn new(cap: u64) -> Self {
        ListModel {
            present: (1..=cap).collect(),
            cap,
        }
    }

    fn grow(&mut self, p: u64) {
        while (self.present.len() as u64) < p {
            self.cap += 1;
            self.present.push(self.cap);
        }
    }

    pub fn select(&mut self, p: u64) -> u64 {
        self.grow(p);
        self.present[p as usize - 1]
    }

    pub fn delete_at(&mut self, p: u64) -> u64 {
        self.grow(p);
        self.present.remove(p as usize - 1)
    }

    pub fn rank(&self, i: u64) -> u64 {
        let inside = self.present.partition_point(|&v| v <= i) as u64;
        inside + i.saturating_sub(self.cap)
    }

    pub fn contains(&self, i: u64) -> bool {
        i > self.cap || self.present.binary_search(&i).is_ok()
    }
}
