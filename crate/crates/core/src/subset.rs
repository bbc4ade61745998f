//! Packed subsets of a poset carrier.

use std::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = u64::BITS as usize;

/// A set of element indices of one particular poset.
///
/// Every subset remembers the identity of the poset it was created for, so
/// that cones are never taken over a foreign carrier. Up to 128 elements are
/// stored inline.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    owner: u64,
    len: usize,
    words: SmallVec<[u64; 2]>,
}

impl Subset {
    pub(crate) fn empty(owner: u64, len: usize) -> Self {
        Self {
            owner,
            len,
            words: smallvec![0; len.div_ceil(WORD)],
        }
    }

    pub(crate) fn full(owner: u64, len: usize) -> Self {
        let mut s = Self::empty(owner, len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub(crate) fn singleton(owner: u64, len: usize, x: usize) -> Self {
        let mut s = Self::empty(owner, len);
        s.insert(x);
        s
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub(crate) fn owner(&self) -> u64 {
        self.owner
    }

    /// Size of the ambient carrier.
    pub fn universe_len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / WORD] & (1 << (x % WORD)) != 0
    }

    /// Inserts `x`; returns whether it was newly added.
    ///
    /// Panics if `x` is outside the carrier.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.len,
            "element {x} outside carrier of size {}",
            self.len
        );
        let w = &mut self.words[x / WORD];
        let before = *w;
        *w |= 1 << (x % WORD);
        *w != before
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.len {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    /// Single element, if the set has exactly one.
    pub fn as_singleton(&self) -> Option<usize> {
        let mut it = self.iter();
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Ordering used for deterministic listings: by size, then member list.
    pub fn size_lex_cmp(&self, other: &Subset) -> std::cmp::Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_respects_length() {
        let s = Subset::full(0, 70);
        assert_eq!(s.count(), 70);
        assert!(s.contains(69));
        assert!(!s.contains(70));
    }

    #[test]
    fn iteration_crosses_words() {
        let mut s = Subset::empty(0, 130);
        for x in [0, 63, 64, 127, 129] {
            s.insert(x);
        }
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 129]);
        assert_eq!(s.as_singleton(), None);
        assert_eq!(Subset::singleton(0, 130, 64).as_singleton(), Some(64));
    }

    #[test]
    fn subset_and_size_order() {
        let mut a = Subset::empty(0, 8);
        a.insert(1);
        let mut b = a.clone();
        b.insert(3);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.size_lex_cmp(&b), std::cmp::Ordering::Less);
    }
}
