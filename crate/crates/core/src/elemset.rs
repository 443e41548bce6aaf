//! Bitmap subsets of a finite carrier `0..universe`.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn singleton(universe: usize, e: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(e);
        s
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(universe: usize, elems: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts `e`, returning `true` if it was not already present.
    ///
    /// Panics if `e` is outside the carrier.
    pub fn insert(&mut self, e: usize) -> bool {
        assert!(e < self.universe, "element {e} outside carrier of size {}", self.universe);
        let (w, bit) = (e / 64, 1u64 << (e % 64));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.universe && self.words[e / 64] & (1u64 << (e % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(other.words.iter().chain(std::iter::repeat(&0)))
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = ElemSet::empty(130);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert!(s.contains(129) && !s.contains(64) && !s.contains(500));
        assert_eq!(s.to_vec(), vec![0, 129]);
        assert_eq!(s.len(), 2);
        assert!(ElemSet::full(130).is_full());
    }

    proptest! {
        #[test]
        fn iter_matches_sorted_dedup(xs in proptest::collection::vec(0usize..200, 0..50)) {
            let s = ElemSet::from_elems(200, xs.iter().copied());
            let mut want = xs.clone();
            want.sort_unstable();
            want.dedup();
            prop_assert_eq!(s.to_vec(), want);
        }

        #[test]
        fn intersection_is_subset(xs in proptest::collection::vec(0usize..100, 0..40),
                                  ys in proptest::collection::vec(0usize..100, 0..40)) {
            let a = ElemSet::from_elems(100, xs);
            let b = ElemSet::from_elems(100, ys);
            let i = a.intersection(&b);
            prop_assert!(i.is_subset(&a) && i.is_subset(&b));
            for e in 0..100 {
                prop_assert_eq!(i.contains(e), a.contains(e) && b.contains(e));
            }
        }
    }
}
