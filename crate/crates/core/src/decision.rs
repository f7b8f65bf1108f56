//! Verdicts on whether the boundary action is scrambled, each with a
//! certificate that [`Verdict::verify`] can re-check from scratch.
//!
//! For right-angled systems with more than two boundary points the answer is
//! exact: scrambled iff `(W_S̃, S̃)` is irreducible. For other systems only
//! the sufficient conditions are used and the outcome is often `Unknown`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ball::ball;
use crate::racg::{self, NormalForm, RacgError};
use crate::system::{CoxeterSystem, SystemError};
use crate::word::{Generator, GeneratorSubset, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecisionError {
    #[error("the system is not right-angled")]
    NotRightAngled,
    #[error("the boundary has at most two points")]
    BoundaryTooSmall,
    #[error("m({s0}, {t0}) is finite")]
    OrderNotInfinite { s0: Generator, t0: Generator },
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Racg(#[from] RacgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryClass {
    /// `W` is finite.
    Empty,
    /// `W` is `D∞` times a finite group.
    TwoPoints,
    MoreThanTwo,
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryClass::Empty => "empty",
            BoundaryClass::TwoPoints => "two points",
            BoundaryClass::MoreThanTwo => "more than two points",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Scrambled,
    NotScrambled,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Scrambled => "scrambled",
            Outcome::NotScrambled => "not scrambled",
            Outcome::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `S̃` itself; its Coxeter diagram (∞-graph when right-angled) is
    /// connected.
    IrreducibleTilde(GeneratorSubset),
    /// `S̃ = A ⊔ B` with `A` and `B` commuting elementwise and both
    /// generating infinite groups.
    ProductObstruction(GeneratorSubset, GeneratorSubset),
    /// A generator with finite centralizer.
    ReflectionCriterion(Generator),
    /// `o(s₀t₀) = ∞` and every pair of short elements is pushed into the
    /// piece of `s₀` by some `x` with `ℓ(x) ≤ k`.
    Theorem71Witness { s0: Generator, t0: Generator, k: usize },
    BoundaryTooSmall,
    OutOfScope(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub certificate: Certificate,
}

/// Ball radius used when re-checking a [`Certificate::Theorem71Witness`].
pub const WITNESS_CHECK_RADIUS: usize = 2;

impl Verdict {
    fn new(outcome: Outcome, certificate: Certificate) -> Self {
        Verdict { outcome, certificate }
    }

    /// Re-validates the certificate against `sys` without reusing the
    /// procedure that produced it, and checks it fits the outcome.
    pub fn verify(&self, sys: &CoxeterSystem) -> bool {
        use Certificate::*;
        let fits = matches!(
            (&self.outcome, &self.certificate),
            (Outcome::Scrambled, IrreducibleTilde(_) | ReflectionCriterion(_) | Theorem71Witness { .. })
                | (Outcome::NotScrambled, ProductObstruction(..) | BoundaryTooSmall)
                | (Outcome::Unknown, OutOfScope(_))
        );
        if !fits {
            return false;
        }
        let large = boundary_size_class(sys) == BoundaryClass::MoreThanTwo;
        match &self.certificate {
            IrreducibleTilde(t) => large && *t == sys.tilde_s() && sys.diagram_components(*t).len() == 1,
            ProductObstruction(a, b) => {
                a.is_disjoint(*b)
                    && a.union(*b) == sys.tilde_s()
                    && !sys.is_spherical(*a)
                    && !sys.is_spherical(*b)
                    && a.iter().all(|s| b.iter().all(|t| sys.commutes(s, t)))
            }
            ReflectionCriterion(s) => {
                large && *s < sys.rank() && racg::generator_centralizer_finite(sys, *s).unwrap_or(false)
            }
            Theorem71Witness { s0, t0, k } => {
                large
                    && check_theorem71_condition(sys, *s0, *t0, *k, WITNESS_CHECK_RADIUS)
                        .map(|c| c.holds)
                        .unwrap_or(false)
            }
            BoundaryTooSmall => !large,
            OutOfScope(_) => true,
        }
    }
}

/// Size of the boundary: `Empty` for finite `W`, `TwoPoints` when `S̃` is a
/// single pair with `m = ∞`, otherwise `MoreThanTwo`.
pub fn boundary_size_class(sys: &CoxeterSystem) -> BoundaryClass {
    let tilde = sys.tilde_s();
    if tilde.is_empty() {
        return BoundaryClass::Empty;
    }
    if tilde.len() == 2 {
        let mut it = tilde.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        if sys.m(a, b).is_infinite() {
            return BoundaryClass::TwoPoints;
        }
    }
    BoundaryClass::MoreThanTwo
}

/// Exact decision for right-angled systems.
pub fn decide_scrambled_racg(sys: &CoxeterSystem) -> Result<Verdict, DecisionError> {
    if !sys.is_right_angled() {
        return Err(DecisionError::NotRightAngled);
    }
    if boundary_size_class(sys) != BoundaryClass::MoreThanTwo {
        return Ok(Verdict::new(Outcome::NotScrambled, Certificate::BoundaryTooSmall));
    }
    let tilde = sys.tilde_s();
    let components = sys.infinite_components();
    if components.len() == 1 {
        return Ok(Verdict::new(Outcome::Scrambled, Certificate::IrreducibleTilde(tilde)));
    }
    let first = components[0];
    Ok(Verdict::new(
        Outcome::NotScrambled,
        Certificate::ProductObstruction(first, tilde.difference(first)),
    ))
}

/// Decision for any system: exact when right-angled, otherwise only the
/// boundary-size and product obstructions are used and everything else is
/// `Unknown`.
pub fn decide(sys: &CoxeterSystem) -> Verdict {
    if sys.is_right_angled() {
        return decide_scrambled_racg(sys).expect("right-angled input");
    }
    match boundary_size_class(sys) {
        BoundaryClass::Empty | BoundaryClass::TwoPoints => {
            return Verdict::new(Outcome::NotScrambled, Certificate::BoundaryTooSmall)
        }
        BoundaryClass::MoreThanTwo => {}
    }
    if let Some((a, b)) = product_obstruction(sys) {
        return Verdict::new(Outcome::NotScrambled, Certificate::ProductObstruction(a, b));
    }
    Verdict::new(
        Outcome::Unknown,
        Certificate::OutOfScope("only right-angled systems are decided; no product obstruction found".into()),
    )
}

/// Result of [`check_theorem71_condition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem71Check {
    pub holds: bool,
    /// One `x` for each unordered pair `(w, v)` with `w ≤ v` in ball order
    /// that has one.
    pub witnesses: BTreeMap<(Word, Word), Word>,
    /// The first pair without a witness.
    pub failure: Option<(Word, Word)>,
    pub pairs: usize,
}

/// Bounded check of the contraction condition: for all `w, v` with
/// `ℓ ≤ l` there is `x` with `ℓ(x) ≤ k` and
/// `descent_set(wx) = descent_set(vx) = {s₀}`.
///
/// Witnesses are the first suitable `x` in ball order.
pub fn check_theorem71_condition(
    sys: &CoxeterSystem,
    s0: Generator,
    t0: Generator,
    k: usize,
    l: usize,
) -> Result<Theorem71Check, DecisionError> {
    sys.check_generator(s0)?;
    sys.check_generator(t0)?;
    if !sys.m(s0, t0).is_infinite() {
        return Err(DecisionError::OrderNotInfinite { s0, t0 });
    }
    let short = ball(sys, l);
    let candidates = ball(sys, k);
    let mut good = PushTable::new(sys, &short, &candidates, GeneratorSubset::singleton(s0));

    let mut witnesses = BTreeMap::new();
    let mut failure = None;
    let mut pairs = 0;
    for i in 0..short.len() {
        for j in i..short.len() {
            pairs += 1;
            let key = (short[i].clone(), short[j].clone());
            match good.first_common(i, j) {
                Some(x) => {
                    witnesses.insert(key, candidates[x].clone());
                }
                None if failure.is_none() => failure = Some(key),
                None => {}
            }
        }
    }
    Ok(Theorem71Check {
        holds: failure.is_none(),
        witnesses,
        failure,
        pairs,
    })
}

/// Bitsets recording which candidates `x` give `descent_set(w·x) = target`,
/// filled lazily 64 candidates at a time.
struct PushTable<'a> {
    sys: &'a CoxeterSystem,
    short: Vec<NormalForm>,
    general: &'a [Word],
    candidates: &'a [Word],
    target: GeneratorSubset,
    rows: Vec<Vec<u64>>,
}

impl<'a> PushTable<'a> {
    fn new(sys: &'a CoxeterSystem, short: &'a [Word], candidates: &'a [Word], target: GeneratorSubset) -> Self {
        let normal = if sys.is_right_angled() {
            short.iter().map(|w| NormalForm::of(sys, w)).collect()
        } else {
            Vec::new()
        };
        PushTable {
            sys,
            short: normal,
            general: short,
            candidates,
            target,
            rows: vec![Vec::new(); short.len()],
        }
    }

    fn block(&mut self, i: usize, b: usize) -> u64 {
        while self.rows[i].len() <= b {
            let start = self.rows[i].len() * 64;
            let end = (start + 64).min(self.candidates.len());
            let xs = &self.candidates[start..end];
            let bits = if self.sys.is_right_angled() {
                let w = &self.short[i];
                block_bits(xs.par_iter().map(|x| {
                    let mut wx = w.clone();
                    wx.extend(self.sys, x);
                    wx.descents()
                }), self.target)
            } else {
                let w = &self.general[i];
                block_bits(xs.par_iter().map(|x| self.sys.descent_set(&self.sys.multiply(w, x))), self.target)
            };
            self.rows[i].push(bits);
        }
        self.rows[i][b]
    }

    /// Index of the first candidate that works for both `short[i]` and
    /// `short[j]`.
    fn first_common(&mut self, i: usize, j: usize) -> Option<usize> {
        let blocks = self.candidates.len().div_ceil(64);
        (0..blocks).find_map(|b| {
            let both = self.block(i, b) & self.block(j, b);
            (both != 0).then(|| b * 64 + both.trailing_zeros() as usize)
        })
    }
}

fn block_bits(descents: impl IndexedParallelIterator<Item = GeneratorSubset>, target: GeneratorSubset) -> u64 {
    descents
        .enumerate()
        .filter(|(_, d)| *d == target)
        .map(|(j, _)| 1u64 << j)
        .reduce(|| 0, |a, b| a | b)
}

/// Smallest generator whose centralizer is finite. Only the right-angled
/// criterion (pairwise commuting link) is available, so this is `None` for
/// other systems.
pub fn reflection_criterion(sys: &CoxeterSystem) -> Option<Generator> {
    if !sys.is_right_angled() {
        return None;
    }
    (0..sys.rank()).find(|&s| racg::generator_centralizer_finite(sys, s).unwrap_or(false))
}

/// A splitting `S̃ = A ⊔ B` into unions of irreducible components with
/// `W_A` and `W_B` infinite. `A` is the first infinite component.
pub fn product_obstruction(sys: &CoxeterSystem) -> Option<(GeneratorSubset, GeneratorSubset)> {
    let components = sys.infinite_components();
    if components.len() < 2 {
        return None;
    }
    let first = components[0];
    Some((first, sys.tilde_s().difference(first)))
}

/// Expansiveness of the boundary action of a right-angled group, which holds
/// iff the group is hyperbolic.
pub fn expansiveness_racg(sys: &CoxeterSystem) -> Result<bool, DecisionError> {
    if !sys.is_right_angled() {
        return Err(DecisionError::NotRightAngled);
    }
    if boundary_size_class(sys) != BoundaryClass::MoreThanTwo {
        return Err(DecisionError::BoundaryTooSmall);
    }
    Ok(racg::is_hyperbolic_racg(sys)?)
}
