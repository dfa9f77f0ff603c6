//! Fixed-capacity sets of file indices, backed by `u64` words.

use std::fmt;

const WORD_BITS: usize = 64;

/// A set of file indices drawn from `0..capacity`.
///
/// Two sets are only comparable (union, subset, equality) when they share a
/// capacity; mixing capacities is a caller bug and panics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FileSet {
    capacity: usize,
    words: Vec<u64>,
}

impl FileSet {
    pub fn empty(capacity: usize) -> Self {
        let words = vec![0u64; capacity.div_ceil(WORD_BITS)];
        FileSet { capacity, words }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = FileSet::empty(capacity);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.mask_tail();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(capacity: usize, indices: I) -> Self {
        let mut set = FileSet::empty(capacity);
        for idx in indices {
            set.insert(idx);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        assert!(index < self.capacity, "file index {index} out of range (capacity {})", self.capacity);
        self.words[index / WORD_BITS] & (1 << (index % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.capacity, "file index {index} out of range (capacity {})", self.capacity);
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.capacity, "file index {index} out of range (capacity {})", self.capacity);
        self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
    }

    pub fn union_with(&mut self, other: &FileSet) {
        self.check_capacity(other);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn union(&self, other: &FileSet) -> FileSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersects(&self, other: &FileSet) -> bool {
        self.check_capacity(other);
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &FileSet) -> bool {
        self.check_capacity(other);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn is_superset_of(&self, other: &FileSet) -> bool {
        other.is_subset_of(self)
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn mask_tail(&mut self) {
        let tail = self.capacity % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    fn check_capacity(&self, other: &FileSet) {
        assert_eq!(
            self.capacity, other.capacity,
            "file set capacity mismatch: {} vs {}",
            self.capacity, other.capacity
        );
    }
}

impl fmt::Debug for FileSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
