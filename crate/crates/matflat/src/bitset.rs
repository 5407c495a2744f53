//! Fixed-width bitsets over ground-set elements `0..n` with `n <= 256`.
//!
//! All subset operations used by rank oracles and flat enumeration are exact
//! word operations. The `Ord` instance is the lexicographic order on sorted
//! element lists, which is the canonical order flat levels are stored in.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground-set size.
pub const MAX_ELEMENTS: usize = 256;

const WORDS: usize = MAX_ELEMENTS / 64;

/// A subset of `{0, .., 255}` stored as a 256-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset {
    words: [u64; WORDS],
}

impl Subset {
    pub const EMPTY: Subset = Subset { words: [0; WORDS] };

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        assert!(n <= MAX_ELEMENTS, "ground set larger than {MAX_ELEMENTS}");
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        Subset { words }
    }

    pub fn singleton(e: usize) -> Subset {
        let mut s = Subset::EMPTY;
        s.insert(e);
        s
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        let mut s = Subset::EMPTY;
        for e in elems {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < MAX_ELEMENTS);
        self.words[e / 64] >> (e % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        assert!(e < MAX_ELEMENTS, "element {e} out of range");
        self.words[e / 64] |= 1u64 << (e % 64);
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        debug_assert!(e < MAX_ELEMENTS);
        self.words[e / 64] &= !(1u64 << (e % 64));
    }

    #[inline]
    pub fn with(mut self, e: usize) -> Subset {
        self.insert(e);
        self
    }

    #[inline]
    pub fn without(mut self, e: usize) -> Subset {
        self.remove(e);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Subset) -> Subset {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        Subset { words }
    }

    #[inline]
    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        Subset { words }
    }

    #[inline]
    pub fn difference(&self, other: &Subset) -> Subset {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        Subset { words }
    }

    #[inline]
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Elements {
        Elements { words: self.words, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Subset {
        Subset::from_elems(iter)
    }
}

impl Ord for Subset {
    /// Lexicographic order on the sorted element lists (shorter prefix first).
    fn cmp(&self, other: &Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Subset) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the elements of a [`Subset`].
pub struct Elements {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let tz = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl IntoIterator for &Subset {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn basic_ops() {
        let mut s = Subset::EMPTY;
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(255);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 255]);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 63, 255]);
        assert!(s.contains(63));
        assert!(!s.contains(64));
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_set_boundaries() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(1).to_vec(), vec![0]);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(65).len(), 65);
        assert_eq!(Subset::full(256).len(), 256);
    }

    #[test]
    fn sorted_list_order() {
        let a = Subset::from_elems([0, 1, 2]);
        let b = Subset::from_elems([0, 2]);
        let c = Subset::from_elems([0, 1]);
        // [0,1] < [0,1,2] < [0,2]
        assert!(c < a);
        assert!(a < b);
        assert!(Subset::EMPTY < c);
    }

    proptest! {
        #[test]
        fn ops_match_btreeset_model(xs in proptest::collection::btree_set(0usize..256, 0..40),
                                    ys in proptest::collection::btree_set(0usize..256, 0..40)) {
            let a = Subset::from_elems(xs.iter().copied());
            let b = Subset::from_elems(ys.iter().copied());
            let union: BTreeSet<_> = xs.union(&ys).copied().collect();
            let inter: BTreeSet<_> = xs.intersection(&ys).copied().collect();
            let diff: BTreeSet<_> = xs.difference(&ys).copied().collect();
            prop_assert_eq!(a.union(&b).to_vec(), union.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), inter.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), diff.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset_of(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.len(), xs.len());
            // Ord agrees with lexicographic comparison of sorted lists.
            let la: Vec<_> = xs.iter().copied().collect();
            let lb: Vec<_> = ys.iter().copied().collect();
            prop_assert_eq!(a.cmp(&b), la.cmp(&lb));
        }
    }
}
