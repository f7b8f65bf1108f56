//! Descent pushing in irreducible right-angled systems.
//!
//! Right-multiplying `w` by a letter `s₀ ∉ S(w)` leaves exactly the descents
//! of `w` that commute with `s₀`, plus `s₀` itself. Following a walk
//! `t₁ t₂ ⋯ tₙ` in the non-commutation graph that visits every generator, no
//! old descent survives (irreducibility), so the product has the single
//! descent `tₙ`. Pairs of elements can be pushed simultaneously once a short
//! prefix `x₀` makes their combined descents miss some generator.

use crate::system::CoxeterSystem;
use crate::word::{Generator, GeneratorSubset, Word};

use super::normal_form::NormalForm;
use super::{require_irreducible_racg, require_right_angled, RacgError};

/// Descent set of `w · s₀` for any `w` with descent set `descents`:
/// `{t ∈ descents | m(t, s₀) = 2} ∪ {s₀}`.
pub fn descent_update(
    sys: &CoxeterSystem,
    descents: GeneratorSubset,
    s0: Generator,
) -> Result<GeneratorSubset, RacgError> {
    require_right_angled(sys)?;
    sys.check_generator(s0)?;
    if descents.contains(s0) {
        return Err(RacgError::DescentContainsS0(s0));
    }
    Ok(descents.intersection(sys.commuting_with(s0)).with(s0))
}

/// A walk `t₁ ⋯ tₙ` with `m(tᵢ, tᵢ₊₁) = ∞` whose entries cover `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain(Vec<Generator>);

impl Chain {
    /// Checks the chain conditions against `sys`.
    pub fn new(sys: &CoxeterSystem, sequence: Vec<Generator>) -> Result<Self, RacgError> {
        for &t in &sequence {
            sys.check_generator(t)?;
        }
        if let Some(pair) = sequence.windows(2).find(|p| !sys.m(p[0], p[1]).is_infinite()) {
            return Err(RacgError::InvalidChain(format!(
                "consecutive entries {} and {} do not generate an infinite dihedral group",
                sys.label(pair[0]),
                sys.label(pair[1])
            )));
        }
        let covered: GeneratorSubset = sequence.iter().copied().collect();
        if covered != sys.all() {
            return Err(RacgError::InvalidChain(format!(
                "entries {} do not cover every generator",
                sys.format_subset(covered)
            )));
        }
        Ok(Chain(sequence))
    }

    pub fn sequence(&self) -> &[Generator] {
        &self.0
    }

    pub fn first(&self) -> Generator {
        self.0[0]
    }

    pub fn last(&self) -> Generator {
        *self.0.last().expect("chains are nonempty")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word::new(self.0.clone())
    }
}

/// Builds a chain starting outside `first_forbidden` and ending at `last`.
///
/// A depth-first spanning tree of the `∞`-graph is rooted at the least
/// generator outside `first_forbidden`. The walk visits every subtree,
/// returning to the parent after each, except along the tree path to
/// `last`, which is taken once and last. Every tree edge off that path is
/// traversed twice and every path edge once, so the chain has at most
/// `2·|S| − 1` entries.
pub fn build_chain(
    sys: &CoxeterSystem,
    first_forbidden: GeneratorSubset,
    last: Generator,
) -> Result<Chain, RacgError> {
    require_irreducible_racg(sys)?;
    sys.check_generator(last)?;
    let root = sys
        .all()
        .difference(first_forbidden)
        .first()
        .ok_or(RacgError::ForbiddenCoversS)?;

    let n = sys.rank();
    let mut parent = vec![usize::MAX; n];
    let mut children: Vec<Vec<Generator>> = vec![Vec::new(); n];
    let mut visited = GeneratorSubset::singleton(root);
    let mut stack = vec![root];
    while let Some(&v) = stack.last() {
        match sys.free_with(v).difference(visited).first() {
            Some(u) => {
                visited.insert(u);
                parent[u] = v;
                children[v].push(u);
                stack.push(u);
            }
            None => {
                stack.pop();
            }
        }
    }
    debug_assert_eq!(visited, sys.all());

    let mut on_path = GeneratorSubset::singleton(last);
    let mut v = last;
    while v != root {
        v = parent[v];
        on_path.insert(v);
    }

    fn tour(v: Generator, children: &[Vec<Generator>], out: &mut Vec<Generator>) {
        out.push(v);
        for &c in &children[v] {
            tour(c, children, out);
            out.push(v);
        }
    }

    let mut walk = Vec::with_capacity(2 * n);
    let mut v = root;
    loop {
        walk.push(v);
        let mut next = None;
        for &c in &children[v] {
            if on_path.contains(c) {
                next = Some(c);
            } else {
                tour(c, &children, &mut walk);
                walk.push(v);
            }
        }
        match next {
            Some(c) => v = c,
            None => break,
        }
    }
    debug_assert_eq!(walk.last(), Some(&last));
    debug_assert!(walk.len() < 2 * n.max(1));
    Chain::new(sys, walk)
}

/// Normal form of `w · t₁ ⋯ tₙ`; its descent set is `{tₙ}`.
pub fn push_to_singleton(sys: &CoxeterSystem, w: &NormalForm, chain: &Chain) -> Result<NormalForm, RacgError> {
    require_irreducible_racg(sys)?;
    if w.descents().contains(chain.first()) {
        return Err(RacgError::ChainStartsInDescent(chain.first()));
    }
    let mut out = w.clone();
    out.extend(sys, &chain.to_word());
    Ok(out)
}

/// A word `x` with `ℓ(x) ≤ 1` and `S(wx) ∪ S(vx) ≠ S`.
///
/// Tries `x = 1`, then single letters from `S(w)`, then from `S(v)`, each
/// in increasing index order. In an irreducible right-angled system with
/// more than two boundary points one of these always works.
pub fn common_normalizer_step(sys: &CoxeterSystem, w: &NormalForm, v: &NormalForm) -> Result<Word, RacgError> {
    require_large_boundary(sys)?;
    let all = sys.all();
    if w.descents().union(v.descents()) != all {
        return Ok(Word::identity());
    }
    let candidates = w.descents().iter().chain(v.descents().iter());
    for s in candidates {
        let mut ws = w.clone();
        ws.push(sys, s);
        let mut vs = v.clone();
        vs.push(sys, s);
        if ws.descents().union(vs.descents()) != all {
            return Ok(Word::new(vec![s]));
        }
    }
    Err(RacgError::NoSuchX)
}

/// A word `x = x₀ · t₁ ⋯ tₙ` with `S(wx) = S(vx) = {s₀}` and
/// `ℓ(x) ≤ 1 + n`, returned in normal form.
pub fn joint_push(sys: &CoxeterSystem, w: &NormalForm, v: &NormalForm, s0: Generator) -> Result<Word, RacgError> {
    sys.check_generator(s0)?;
    let x0 = common_normalizer_step(sys, w, v)?;
    let mut wx = w.clone();
    wx.extend(sys, &x0);
    let mut vx = v.clone();
    vx.extend(sys, &x0);
    let chain = build_chain(sys, wx.descents().union(vx.descents()), s0)?;
    let mut x = NormalForm::identity();
    x.extend(sys, &x0);
    x.extend(sys, &chain.to_word());
    Ok(x.into_word())
}

/// Irreducible, right-angled and of rank at least 3, which for right-angled
/// systems is exactly "irreducible with more than two boundary points".
fn require_large_boundary(sys: &CoxeterSystem) -> Result<(), RacgError> {
    require_irreducible_racg(sys)?;
    if sys.rank() < 3 {
        return Err(RacgError::BoundaryTooSmall);
    }
    Ok(())
}
