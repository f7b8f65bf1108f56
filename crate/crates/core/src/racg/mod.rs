//! Right-angled Coxeter systems: normal forms, descent pushing,
//! irreducibility, hyperbolicity and the generator-centralizer test.
//!
//! In a right-angled system `m(s, t) ∈ {2, ∞}` for `s ≠ t`, so elements are
//! traces over the commutation relation and a reduced word can be put in a
//! lexicographic normal form by local moves alone.

mod chain;
mod normal_form;
mod structure;

use thiserror::Error;

use crate::system::{CoxeterSystem, SystemError};
use crate::word::Generator;

pub use chain::{build_chain, common_normalizer_step, descent_update, joint_push, push_to_singleton, Chain};
pub(crate) use normal_form::{append_letter, Placement};
pub use normal_form::{nf, nf_append, NormalForm};
pub use structure::{
    flat_quadruple, generator_centralizer_finite, is_hyperbolic_racg, is_irreducible_racg, link,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RacgError {
    #[error("the system is not right-angled")]
    NotRightAngled,
    #[error("the system is not irreducible")]
    NotIrreducible,
    #[error("the boundary has at most two points")]
    BoundaryTooSmall,
    #[error("generator {0} is already a descent")]
    DescentContainsS0(Generator),
    #[error("the forbidden set covers every generator")]
    ForbiddenCoversS,
    #[error("the chain starts with descent {0}")]
    ChainStartsInDescent(Generator),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("no word of length at most 1 separates the descent sets")]
    NoSuchX,
    #[error(transparent)]
    System(#[from] SystemError),
}

pub(crate) fn require_right_angled(sys: &CoxeterSystem) -> Result<(), RacgError> {
    if sys.is_right_angled() {
        Ok(())
    } else {
        Err(RacgError::NotRightAngled)
    }
}

pub(crate) fn require_irreducible_racg(sys: &CoxeterSystem) -> Result<(), RacgError> {
    if is_irreducible_racg(sys)? {
        Ok(())
    } else {
        Err(RacgError::NotIrreducible)
    }
}
