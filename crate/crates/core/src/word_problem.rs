//! The word problem for arbitrary Coxeter systems.
//!
//! Right-angled systems go through the normal-form engine in
//! [`crate::racg`]. Everything else uses Tits' solution: a word is reduced
//! iff no sequence of braid moves exposes two equal adjacent letters, and
//! the reduced words of one element form a single braid-move class.
//!
//! Elements are tracked by their whole class of reduced words. Multiplying
//! by `s` either shortens the element (exactly when some reduced word ends
//! in `s`, and then the new class is those words with the final `s`
//! dropped) or lengthens it (and the new class is the braid closure of any
//! one word with `s` appended). The canonical representative is the
//! lexicographically least word of the class.

use std::collections::{HashSet, VecDeque};

use crate::matrix::Order;
use crate::racg::NormalForm;
use crate::system::CoxeterSystem;
use crate::word::{Generator, GeneratorSubset, Word};

impl CoxeterSystem {
    /// Canonical reduced word: the lexicographically least reduced word for
    /// the element `w` represents. Two words give the same output iff they
    /// represent the same element.
    pub fn reduce(&self, w: &Word) -> Word {
        self.assert_word(w);
        if self.is_right_angled() {
            return NormalForm::of(self, w).into_word();
        }
        reduced_class(self, w.letters())
            .into_iter()
            .min()
            .map(Word::new)
            .unwrap_or_default()
    }

    /// `ℓ(w)`.
    pub fn word_length(&self, w: &Word) -> usize {
        self.assert_word(w);
        if self.is_right_angled() {
            return NormalForm::of(self, w).len();
        }
        reduced_class(self, w.letters())
            .iter()
            .next()
            .map_or(0, Vec::len)
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        self.word_length(w) == w.len()
    }

    /// `d(u, v) = ℓ(u⁻¹ v)`.
    pub fn word_distance(&self, u: &Word, v: &Word) -> usize {
        self.word_length(&u.inverse().concat(v))
    }

    /// Canonical word for the product `u · v`.
    pub fn multiply(&self, u: &Word, v: &Word) -> Word {
        self.reduce(&u.concat(v))
    }

    /// `S(w) = {s ∈ S | ℓ(ws) < ℓ(w)}`.
    pub fn descent_set(&self, w: &Word) -> GeneratorSubset {
        self.assert_word(w);
        if self.is_right_angled() {
            return NormalForm::of(self, w).descents();
        }
        reduced_class(self, w.letters())
            .iter()
            .filter_map(|u| u.last().copied())
            .collect()
    }

    /// Membership in `W^T = {w | S(w) = T}`.
    pub fn in_piece(&self, w: &Word, t: GeneratorSubset) -> bool {
        self.descent_set(w) == t
    }

    fn assert_word(&self, w: &Word) {
        if let Err(e) = self.check_word(w) {
            panic!("{e}");
        }
    }
}

/// All reduced words of the element represented by `letters`.
fn reduced_class(sys: &CoxeterSystem, letters: &[Generator]) -> HashSet<Vec<Generator>> {
    let mut class: HashSet<Vec<Generator>> = HashSet::from([Vec::new()]);
    for &s in letters {
        let shortened: HashSet<Vec<Generator>> = class
            .iter()
            .filter(|u| u.last() == Some(&s))
            .map(|u| u[..u.len() - 1].to_vec())
            .collect();
        class = if shortened.is_empty() {
            let mut seed = class.into_iter().next().unwrap_or_default();
            seed.push(s);
            braid_closure(sys, seed)
        } else {
            shortened
        };
    }
    class
}

/// Every word reachable from `seed` by braid moves `sts… ↔ tst…` (`m(s,t)`
/// letters each side).
fn braid_closure(sys: &CoxeterSystem, seed: Vec<Generator>) -> HashSet<Vec<Generator>> {
    let mut seen = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(u) = queue.pop_front() {
        for i in 0..u.len().saturating_sub(1) {
            let (s, t) = (u[i], u[i + 1]);
            if s == t {
                continue;
            }
            let Order::Finite(m) = sys.m(s, t) else {
                continue;
            };
            let m = m as usize;
            if i + m > u.len() {
                continue;
            }
            let alternating = (0..m).all(|k| u[i + k] == if k % 2 == 0 { s } else { t });
            if !alternating {
                continue;
            }
            let mut v = u.clone();
            for k in 0..m {
                v[i + k] = if k % 2 == 0 { t } else { s };
            }
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}
