use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::words_for;

/// Membership bit-mask over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(k * 64 + b)
        })
    })
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for u in 0..n {
            s.insert(u);
        }
        s
    }

    pub fn from_iter_n<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::new(n);
        for u in members {
            s.insert(u);
        }
        s
    }

    /// Set over `n ≤ 64` vertices from a bit mask.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut s = Self::new(n);
        s.words[0] = if n >= 64 { mask } else { mask & ((1u64 << n) - 1) };
        s
    }

    /// Size of the universe `0..n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Panics if `u` is outside the universe.
    pub fn insert(&mut self, u: usize) {
        assert!(u < self.n, "vertex {u} outside universe of size {}", self.n);
        self.words[u / 64] |= 1 << (u % 64);
    }

    pub fn remove(&mut self, u: usize) {
        if u < self.n {
            self.words[u / 64] &= !(1 << (u % 64));
        }
    }

    pub fn contains(&self, u: usize) -> bool {
        u < self.n && self.words[u / 64] >> (u % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0) && self.words.len() <= other.words.len()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Deserializes from a vertex list; the universe is one past the largest member.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        let n = members.iter().max().map_or(0, |&u| u + 1);
        Ok(VertexSet::from_iter_n(n, members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn popcount_tracks_membership() {
        let mut s = VertexSet::new(130);
        for u in [0, 63, 64, 129] {
            s.insert(u);
        }
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 3);
        assert!(!s.contains(500));
    }

    #[test]
    fn mask_is_truncated_to_universe() {
        let s = VertexSet::from_mask(3, 0b11111);
        assert_eq!(s.len(), 3);
        assert!(s.is_subset(&VertexSet::full(3)));
    }
}
