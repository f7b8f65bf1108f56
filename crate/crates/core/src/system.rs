//! Validated Coxeter systems.

use std::collections::HashMap;

use thiserror::Error;

use crate::matrix::{CoxeterMatrix, Order};
use crate::word::{Generator, GeneratorSubset, Word, MAX_RANK};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("rank must be between 1 and {MAX_RANK}, got {0}")]
    RankOutOfRange(usize),
    #[error("expected {rank} generator labels, got {labels}")]
    LabelCountMismatch { rank: usize, labels: usize },
    #[error("diagonal entry ({0}, {0}) must be 1")]
    BadDiagonal(usize),
    #[error("entries ({i}, {j}) and ({j}, {i}) differ")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("off-diagonal entry ({i}, {j}) must be at least 2")]
    EntryBelowTwo { i: usize, j: usize },
    #[error("label {label:?} is used by generators {first} and {second}")]
    DuplicateLabel {
        label: String,
        first: usize,
        second: usize,
    },
    #[error("invalid generator label {0:?}")]
    InvalidLabel(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {index} is out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
}

/// A Coxeter system `(W, S)`: ordered generator labels plus a Coxeter matrix.
///
/// Everything else in the crate is a function of this value. Construction
/// goes through [`CoxeterSystem::new`], so every instance satisfies the
/// matrix axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    labels: Vec<String>,
    matrix: CoxeterMatrix,
    right_angled: bool,
    commuting: Vec<GeneratorSubset>,
    free: Vec<GeneratorSubset>,
}

impl CoxeterSystem {
    /// Checks the Coxeter axioms and label distinctness.
    ///
    /// Errors name the first offending index (pair), scanning rows in order.
    pub fn new(matrix: CoxeterMatrix, labels: Vec<String>) -> Result<Self, SystemError> {
        let rank = matrix.rank();
        if rank == 0 || rank > MAX_RANK {
            return Err(SystemError::RankOutOfRange(rank));
        }
        if labels.len() != rank {
            return Err(SystemError::LabelCountMismatch {
                rank,
                labels: labels.len(),
            });
        }
        for i in 0..rank {
            for j in 0..rank {
                let m = matrix.get(i, j);
                if i == j {
                    if m != Order::Finite(1) {
                        return Err(SystemError::BadDiagonal(i));
                    }
                    continue;
                }
                if m != matrix.get(j, i) {
                    return Err(SystemError::AsymmetricMatrix { i, j });
                }
                if matches!(m, Order::Finite(k) if k < 2) {
                    return Err(SystemError::EntryBelowTwo { i, j });
                }
            }
        }
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for (idx, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(SystemError::InvalidLabel(label.clone()));
            }
            if let Some(&first) = seen.get(label.as_str()) {
                return Err(SystemError::DuplicateLabel {
                    label: label.clone(),
                    first,
                    second: idx,
                });
            }
            seen.insert(label, idx);
        }

        let mut right_angled = true;
        let mut commuting = vec![GeneratorSubset::EMPTY; rank];
        let mut free = vec![GeneratorSubset::EMPTY; rank];
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                match matrix.get(i, j) {
                    Order::Finite(2) => commuting[i].insert(j),
                    Order::Infinite => free[i].insert(j),
                    _ => right_angled = false,
                }
            }
        }
        Ok(CoxeterSystem {
            labels,
            matrix,
            right_angled,
            commuting,
            free,
        })
    }

    /// Right-angled system on `labels` in which exactly the listed pairs have
    /// `m = ∞`; every other distinct pair commutes.
    pub fn right_angled_from_free_pairs(
        labels: &[&str],
        free_pairs: &[(Generator, Generator)],
    ) -> Result<Self, SystemError> {
        let rank = labels.len();
        let matrix = CoxeterMatrix::symmetric(rank, |i, j| {
            if free_pairs.contains(&(i, j)) || free_pairs.contains(&(j, i)) {
                Order::Infinite
            } else {
                Order::Finite(2)
            }
        });
        Self::new(matrix, labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: Generator) -> &str {
        &self.labels[s]
    }

    pub fn index_of(&self, label: &str) -> Option<Generator> {
        self.labels.iter().position(|l| l == label)
    }

    /// `m(s, t)`.
    pub fn m(&self, s: Generator, t: Generator) -> Order {
        self.matrix.get(s, t)
    }

    pub fn is_right_angled(&self) -> bool {
        self.right_angled
    }

    /// `st = ts` with `s ≠ t`.
    pub fn commutes(&self, s: Generator, t: Generator) -> bool {
        self.commuting[s].contains(t)
    }

    /// Generators `t ≠ s` with `m(s, t) = 2`.
    pub fn commuting_with(&self, s: Generator) -> GeneratorSubset {
        self.commuting[s]
    }

    /// Generators `t` with `m(s, t) = ∞`.
    pub fn free_with(&self, s: Generator) -> GeneratorSubset {
        self.free[s]
    }

    pub fn all(&self) -> GeneratorSubset {
        GeneratorSubset::full(self.rank())
    }

    pub fn check_generator(&self, s: Generator) -> Result<(), SystemError> {
        if s < self.rank() {
            Ok(())
        } else {
            Err(SystemError::GeneratorOutOfRange {
                index: s,
                rank: self.rank(),
            })
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<(), SystemError> {
        w.letters().iter().try_for_each(|&s| self.check_generator(s))
    }

    /// Parses whitespace-separated labels. A token that is not itself a label
    /// is split into characters when every character is a one-character
    /// label, so `"ab"` and `"a b"` agree in systems with one-letter labels.
    pub fn parse_word(&self, text: &str) -> Result<Word, SystemError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if let Some(s) = self.index_of(token) {
                letters.push(s);
                continue;
            }
            let mut chars = Vec::new();
            let mut buf = [0u8; 4];
            for c in token.chars() {
                match self.index_of(c.encode_utf8(&mut buf)) {
                    Some(s) => chars.push(s),
                    None => {
                        let unknown = if token.chars().count() == 1 || chars.is_empty() {
                            token.to_string()
                        } else {
                            c.to_string()
                        };
                        return Err(SystemError::UnknownGenerator(unknown));
                    }
                }
            }
            letters.extend(chars);
        }
        Ok(Word::new(letters))
    }

    /// Space-separated labels; the identity formats as the empty string.
    pub fn format_word(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&s| self.label(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_subset(&self, set: GeneratorSubset) -> String {
        let inner = set
            .iter()
            .map(|s| self.label(s))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{{{inner}}}")
    }
}

fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .chars()
            .all(|c| !c.is_whitespace() && !c.is_control() && c != '|' && c != '=' && c != '#')
}
