pub use crate::catalog::*;
use crate::word::{Generator, GeneratorSubset, Word};

pub fn w(letters: &[Generator]) -> Word {
    Word::new(letters.to_vec())
}

pub fn set(members: &[Generator]) -> GeneratorSubset {
    members.iter().copied().collect()
}
