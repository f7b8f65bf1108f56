//! Breadth-first enumeration of word-metric balls around the identity.

use std::collections::BTreeSet;

use crate::racg::NormalForm;
use crate::system::CoxeterSystem;
use crate::word::Word;

/// Canonical words of every element with `ℓ ≤ radius`, ordered by length and
/// then lexicographically. The identity comes first.
pub fn ball(sys: &CoxeterSystem, radius: usize) -> Vec<Word> {
    spheres(sys, radius).into_iter().flatten().collect()
}

/// Canonical words grouped by length `0..=radius`.
pub fn spheres(sys: &CoxeterSystem, radius: usize) -> Vec<Vec<Word>> {
    let mut layers = vec![vec![Word::identity()]];
    for r in 0..radius {
        let mut next = BTreeSet::new();
        for w in &layers[r] {
            for s in 0..sys.rank() {
                if sys.descent_set(w).contains(s) {
                    continue;
                }
                let longer = if sys.is_right_angled() {
                    let mut x = NormalForm::of(sys, w);
                    x.push(sys, s);
                    x.into_word()
                } else {
                    let mut word = w.clone();
                    word.push(s);
                    sys.reduce(&word)
                };
                debug_assert_eq!(longer.len(), r + 1);
                next.insert(longer);
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next.into_iter().collect());
    }
    layers
}
