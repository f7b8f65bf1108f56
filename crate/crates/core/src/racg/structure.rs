use crate::system::CoxeterSystem;
use crate::word::{Generator, GeneratorSubset};

use super::{require_right_angled, RacgError};

/// Connectivity of the graph on `S` with an edge wherever `m(s, t) = ∞`.
/// Rank 1 counts as irreducible.
pub fn is_irreducible_racg(sys: &CoxeterSystem) -> Result<bool, RacgError> {
    require_right_angled(sys)?;
    Ok(free_graph_connected(sys, sys.all()))
}

pub(crate) fn free_graph_connected(sys: &CoxeterSystem, within: GeneratorSubset) -> bool {
    let Some(start) = within.first() else {
        return true;
    };
    let mut seen = GeneratorSubset::singleton(start);
    let mut stack = vec![start];
    while let Some(s) = stack.pop() {
        for t in sys.free_with(s).intersection(within).difference(seen).iter() {
            seen.insert(t);
            stack.push(t);
        }
    }
    seen == within
}

/// Looks for `{a, b, c, d}` with `m(a,b) = m(c,d) = ∞` and the four cross
/// pairs commuting, i.e. a special subgroup `D∞ × D∞`. Returns the first
/// one found in index order.
pub fn flat_quadruple(sys: &CoxeterSystem) -> Result<Option<[Generator; 4]>, RacgError> {
    require_right_angled(sys)?;
    let n = sys.rank();
    for a in 0..n {
        for b in sys.free_with(a).iter().filter(|&b| b > a) {
            let cross = sys.commuting_with(a).intersection(sys.commuting_with(b));
            for c in cross.iter() {
                if let Some(d) = sys.free_with(c).intersection(cross).iter().find(|&d| d > c) {
                    return Ok(Some([a, b, c, d]));
                }
            }
        }
    }
    Ok(None)
}

/// Gromov hyperbolicity of a right-angled Coxeter group: no flat quadruple.
pub fn is_hyperbolic_racg(sys: &CoxeterSystem) -> Result<bool, RacgError> {
    Ok(flat_quadruple(sys)?.is_none())
}

/// `link(s) = {t | m(s, t) = 2}`.
pub fn link(sys: &CoxeterSystem, s: Generator) -> GeneratorSubset {
    sys.commuting_with(s)
}

/// True when the link of `s` is pairwise commuting. The centralizer of `s`
/// is `⟨s⟩ × W_link(s)`, which is then finite.
pub fn generator_centralizer_finite(sys: &CoxeterSystem, s: Generator) -> Result<bool, RacgError> {
    require_right_angled(sys)?;
    sys.check_generator(s)?;
    let link = link(sys, s);
    Ok(link.iter().all(|t| sys.free_with(t).is_disjoint(link)))
}
