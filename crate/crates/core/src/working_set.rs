//! Dynamic rank/select over the positive integers with positional deletion.
//!
//! Presence is a bitmap of `u64` words; a Fenwick tree over per-word
//! popcounts answers prefix counts in `O(log n)`. Indices past the current
//! capacity are implicitly present, so the set behaves like `1..∞` minus the
//! deleted indices.

use crate::error::{Error, Result};

/// Default hard cap on the largest index the set will materialize.
pub const DEFAULT_MAX_INDEX: u64 = 1 << 32;

const WORD: u64 = 64;

#[derive(Debug, Clone)]
pub struct WorkingSet {
    words: Vec<u64>,
    tree: Vec<u64>,
    present: u64,
    max_index: u64,
}

impl Default for WorkingSet {
    fn default() -> Self {
        Self::new()
    }
}

impl WorkingSet {
    pub fn new() -> Self {
        Self::with_capacity(1024, DEFAULT_MAX_INDEX)
    }

    /// A fresh set with room for at least `capacity` indices before growing.
    pub fn with_capacity(capacity: u64, max_index: u64) -> Self {
        let capacity = capacity.clamp(WORD, max_index.max(WORD));
        let n_words = capacity.div_ceil(WORD) as usize;
        let mut ws = WorkingSet {
            words: vec![u64::MAX; n_words],
            tree: Vec::new(),
            present: 0,
            max_index,
        };
        ws.rebuild();
        ws
    }

    pub fn capacity(&self) -> u64 {
        self.words.len() as u64 * WORD
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    /// Number of deletions performed so far.
    pub fn deleted(&self) -> u64 {
        self.capacity() - self.present
    }

    pub fn contains(&self, i: u64) -> bool {
        if i == 0 {
            return false;
        }
        let k = i - 1;
        match self.words.get((k / WORD) as usize) {
            Some(w) => w >> (k % WORD) & 1 == 1,
            None => true,
        }
    }

    /// Number of present indices `<= i`.
    pub fn rank(&self, i: u64) -> u64 {
        if i == 0 {
            return 0;
        }
        let cap = self.capacity();
        if i > cap {
            return self.present + (i - cap);
        }
        let k = i - 1;
        let w = (k / WORD) as usize;
        let bit = k % WORD;
        let mask = if bit == 63 {
            u64::MAX
        } else {
            (1u64 << (bit + 1)) - 1
        };
        self.prefix(w) + (self.words[w] & mask).count_ones() as u64
    }

    /// The `p`-th smallest present index, growing the horizon as needed.
    pub fn select(&mut self, p: u64) -> Result<u64> {
        if p == 0 {
            return Err(Error::Precondition("select is 1-based".into()));
        }
        self.ensure(p)?;
        let i = self.select_within(p);
        if i > self.max_index {
            return Err(Error::ResourceCap {
                requested: i,
                cap: self.max_index,
            });
        }
        Ok(i)
    }

    /// Removes the `p`-th present index and returns it.
    pub fn delete_at(&mut self, p: u64) -> Result<u64> {
        let i = self.select(p)?;
        self.remove(i);
        Ok(i)
    }

    fn remove(&mut self, i: u64) {
        let k = i - 1;
        let w = (k / WORD) as usize;
        self.words[w] &= !(1u64 << (k % WORD));
        self.present -= 1;
        let mut j = w + 1;
        while j < self.tree.len() {
            self.tree[j] -= 1;
            j += j & j.wrapping_neg();
        }
    }

    fn ensure(&mut self, p: u64) -> Result<()> {
        if p <= self.present {
            return Ok(());
        }
        let needed = self
            .deleted()
            .checked_add(p)
            .ok_or(Error::Overflow("working-set horizon"))?;
        if needed > self.max_index {
            return Err(Error::ResourceCap {
                requested: needed,
                cap: self.max_index,
            });
        }
        let mut cap = self.capacity();
        while cap < needed {
            cap = cap.saturating_mul(2);
        }
        let cap = cap.min(self.max_index.div_ceil(WORD) * WORD);
        self.words.resize(cap.div_ceil(WORD) as usize, u64::MAX);
        self.rebuild();
        Ok(())
    }

    fn rebuild(&mut self) {
        let n = self.words.len();
        let mut tree = vec![0u64; n + 1];
        for (w, word) in self.words.iter().enumerate() {
            tree[w + 1] += word.count_ones() as u64;
            let parent = (w + 1) + ((w + 1) & (w + 1).wrapping_neg());
            if parent <= n {
                tree[parent] += tree[w + 1];
            }
        }
        self.present = self.words.iter().map(|w| w.count_ones() as u64).sum();
        self.tree = tree;
    }

    /// Sum of popcounts of the first `w` words.
    fn prefix(&self, w: usize) -> u64 {
        let mut j = w;
        let mut s = 0;
        while j > 0 {
            s += self.tree[j];
            j &= j - 1;
        }
        s
    }

    fn select_within(&self, p: u64) -> u64 {
        let n = self.words.len();
        let mut pos = 0usize;
        let mut rem = p;
        let mut step = if n == 0 {
            0
        } else {
            1usize << (usize::BITS - 1 - n.leading_zeros())
        };
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] < rem {
                pos = next;
                rem -= self.tree[next];
            }
            step >>= 1;
        }
        // `pos` full words precede the target; find the `rem`-th set bit in word `pos`.
        let mut word = self.words[pos];
        for _ in 1..rem {
            word &= word - 1;
        }
        pos as u64 * WORD + word.trailing_zeros() as u64 + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fresh_select() {
        let mut ws = WorkingSet::new();
        assert_eq!(ws.select(5).unwrap(), 5);
        assert_eq!(ws.rank(10), 10);
    }

    #[test]
    fn delete_shifts() {
        let mut ws = WorkingSet::new();
        assert_eq!(ws.delete_at(4).unwrap(), 4);
        assert_eq!(ws.select(4).unwrap(), 5);

        let mut ws = WorkingSet::new();
        assert_eq!(ws.delete_at(1).unwrap(), 1);
        assert_eq!(ws.select(1).unwrap(), 2);

        let mut ws = WorkingSet::new();
        assert_eq!(ws.delete_at(3).unwrap(), 3);
        assert_eq!(ws.select(3).unwrap(), 4);
    }

    #[test]
    fn sieve_prefix_after_three_steps() {
        let mut ws = WorkingSet::new();
        ws.delete_at(1).unwrap();
        ws.delete_at(3).unwrap(); // index 4
        ws.delete_at(5).unwrap(); // index 7
        assert_eq!(ws.select(3).unwrap(), 5);
        assert_eq!(ws.rank(9), 6);
        let prefix: Vec<u64> = (1..=5).map(|p| ws.select(p).unwrap()).collect();
        assert_eq!(prefix, vec![2, 3, 5, 6, 8]);
    }

    #[test]
    fn rank_after_two_deletions() {
        let mut ws = WorkingSet::new();
        ws.delete_at(1).unwrap();
        ws.delete_at(3).unwrap();
        assert_eq!(ws.rank(5), 3);
    }

    #[test]
    fn growth_preserves_state() {
        let mut ws = WorkingSet::with_capacity(64, DEFAULT_MAX_INDEX);
        for _ in 0..40 {
            ws.delete_at(2).unwrap();
        }
        let before: Vec<u64> = (1..=20).map(|p| ws.select(p).unwrap()).collect();
        assert_eq!(ws.select(1000).unwrap(), 1040);
        assert!(ws.capacity() >= 1040);
        let after: Vec<u64> = (1..=20).map(|p| ws.select(p).unwrap()).collect();
        assert_eq!(before, after);
        assert_eq!(ws.rank(41), 1);
    }

    #[test]
    fn hard_cap() {
        let mut ws = WorkingSet::with_capacity(64, 256);
        assert_eq!(ws.select(256).unwrap(), 256);
        assert!(matches!(ws.select(257), Err(Error::ResourceCap { .. })));
        ws.delete_at(1).unwrap();
        assert!(matches!(ws.select(256), Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn matches_naive_model() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut ws = WorkingSet::with_capacity(64, DEFAULT_MAX_INDEX);
        let mut model: Vec<u64> = (1..=16_384).collect();
        for _ in 0..20_000 {
            let p = rng.random_range(1..=model.len() as u64 / 2);
            match rng.random_range(0..3) {
                0 => {
                    let got = ws.delete_at(p).unwrap();
                    assert_eq!(got, model.remove(p as usize - 1));
                }
                1 => assert_eq!(ws.select(p).unwrap(), model[p as usize - 1]),
                _ => {
                    let i = rng.random_range(1..=8192u64);
                    assert_eq!(ws.rank(i), model.partition_point(|&v| v <= i) as u64);
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rank_inverts_select(dels in proptest::collection::vec(1u64..300, 0..200), q in 1u64..500) {
                let mut ws = WorkingSet::with_capacity(64, DEFAULT_MAX_INDEX);
                for p in dels {
                    ws.delete_at(p).unwrap();
                }
                let i = ws.select(q).unwrap();
                prop_assert!(ws.contains(i));
                prop_assert_eq!(ws.rank(i), q);
            }
        }
    }
}
