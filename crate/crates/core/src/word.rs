//! Words over the generating set and small subsets of it.

use std::fmt;

/// Index of a generator in its system's ordered generator list.
pub type Generator = usize;

/// Largest supported rank; subsets are stored as a single `u64` mask.
pub const MAX_RANK: usize = 64;

/// A finite sequence of generator indices. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: Generator) {
        self.0.push(s);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The word spelling the inverse element. Generators are involutions, so
    /// this is the reversed word.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `self` repeated `times` times.
    pub fn power(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    pub fn last(&self) -> Option<Generator> {
        self.0.last().copied()
    }
}

impl From<Vec<Generator>> for Word {
    fn from(letters: Vec<Generator>) -> Self {
        Word(letters)
    }
}

impl From<&[Generator]> for Word {
    fn from(letters: &[Generator]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// A subset of `{0, …, rank-1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSubset(u64);

impl GeneratorSubset {
    pub const EMPTY: GeneratorSubset = GeneratorSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        GeneratorSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All generators of a rank-`rank` system.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank <= MAX_RANK);
        if rank == MAX_RANK {
            GeneratorSubset(u64::MAX)
        } else {
            GeneratorSubset((1u64 << rank) - 1)
        }
    }

    pub fn singleton(s: Generator) -> Self {
        GeneratorSubset(1u64 << s)
    }

    pub fn contains(self, s: Generator) -> bool {
        s < MAX_RANK && self.0 & (1u64 << s) != 0
    }

    pub fn insert(&mut self, s: Generator) {
        self.0 |= 1u64 << s;
    }

    pub fn remove(&mut self, s: Generator) {
        self.0 &= !(1u64 << s);
    }

    pub fn with(self, s: Generator) -> Self {
        GeneratorSubset(self.0 | (1u64 << s))
    }

    pub fn union(self, other: Self) -> Self {
        GeneratorSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        GeneratorSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        GeneratorSubset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Generator> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Generator)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Generator> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let s = bits.trailing_zeros() as Generator;
                bits &= bits - 1;
                Some(s)
            }
        })
    }
}

impl FromIterator<Generator> for GeneratorSubset {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        let mut set = GeneratorSubset::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Debug for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
