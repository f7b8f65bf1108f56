use crate::system::CoxeterSystem;
use crate::word::{Generator, GeneratorSubset, Word};

use super::RacgError;

/// Canonical form of an element of a right-angled Coxeter group.
///
/// The word is reduced and lexicographically least among all words obtained
/// by swapping adjacent commuting letters. The descent set is kept alongside
/// so that repeated right multiplication never rescans the word for it
/// unless a letter cancels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    word: Word,
    descents: GeneratorSubset,
}

/// Where a right-multiplied letter ended up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Placement {
    /// The letter cancelled against the letter at this index, which was removed.
    Cancelled(usize),
    /// The letter was inserted at this index.
    Inserted(usize),
}

/// Right-multiplies a lex-normal reduced word by `s` in place.
///
/// `s` cancels against the last occurrence of `s` when everything after it
/// commutes with `s`. Otherwise it is inserted at the first position, after
/// the last letter that does not commute with `s`, holding a larger letter.
/// Both operations keep the word lex-normal: in the heap of the element the
/// new letter is maximal, and the greedy least-available-letter linearisation
/// of a heap is unchanged by adding or removing a maximal element apart from
/// that element itself.
pub(crate) fn append_letter(sys: &CoxeterSystem, letters: &mut Vec<Generator>, s: Generator) -> Placement {
    let n = letters.len();
    let mut floor = n;
    while floor > 0 {
        let c = letters[floor - 1];
        if c == s {
            letters.remove(floor - 1);
            return Placement::Cancelled(floor - 1);
        }
        if !sys.commutes(c, s) {
            break;
        }
        floor -= 1;
    }
    let pos = (floor..n).find(|&k| letters[k] > s).unwrap_or(n);
    letters.insert(pos, s);
    Placement::Inserted(pos)
}

/// Right descents of a reduced right-angled word: the letters that commute
/// with everything after them.
pub(crate) fn descents_of(sys: &CoxeterSystem, letters: &[Generator]) -> GeneratorSubset {
    let mut after = GeneratorSubset::EMPTY;
    let mut descents = GeneratorSubset::EMPTY;
    for &c in letters.iter().rev() {
        if after.is_subset(sys.commuting_with(c)) {
            descents.insert(c);
        }
        after.insert(c);
    }
    descents
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm::default()
    }

    /// Normal form of `w`. The system must be right-angled.
    pub(crate) fn of(sys: &CoxeterSystem, w: &Word) -> Self {
        debug_assert!(sys.is_right_angled());
        let mut x = NormalForm::identity();
        for &s in w.letters() {
            x.push(sys, s);
        }
        x
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn descents(&self) -> GeneratorSubset {
        self.descents
    }

    /// `ℓ` of the element.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Right-multiplies by `s` in place, in time linear in the length.
    pub(crate) fn push(&mut self, sys: &CoxeterSystem, s: Generator) {
        let mut letters = std::mem::take(&mut self.word).into_letters();
        match append_letter(sys, &mut letters, s) {
            Placement::Inserted(_) => {
                self.descents = self.descents.intersection(sys.commuting_with(s)).with(s);
            }
            Placement::Cancelled(_) => {
                self.descents = descents_of(sys, &letters);
            }
        }
        self.word = Word::new(letters);
    }

    /// Right-multiplies by every letter of `w`.
    pub(crate) fn extend(&mut self, sys: &CoxeterSystem, w: &Word) {
        for &s in w.letters() {
            self.push(sys, s);
        }
    }

    /// Normal form of the first `n` letters. Prefixes of lex-normal words are
    /// lex-normal.
    pub(crate) fn prefix(&self, sys: &CoxeterSystem, n: usize) -> NormalForm {
        let word = self.word.prefix(n);
        let descents = descents_of(sys, word.letters());
        NormalForm { word, descents }
    }
}

/// Normal form of `w` in a right-angled system.
pub fn nf(sys: &CoxeterSystem, w: &Word) -> Result<NormalForm, RacgError> {
    super::require_right_angled(sys)?;
    sys.check_word(w)?;
    Ok(NormalForm::of(sys, w))
}

/// Normal form of `x · s`.
pub fn nf_append(sys: &CoxeterSystem, x: &NormalForm, s: Generator) -> Result<NormalForm, RacgError> {
    super::require_right_angled(sys)?;
    sys.check_generator(s)?;
    let mut y = x.clone();
    y.push(sys, s);
    Ok(y)
}
