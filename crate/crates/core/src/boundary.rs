//! Combinatorial simulation of the boundary action of a right-angled
//! Coxeter group.
//!
//! A boundary point is represented by an eventually periodic infinite reduced
//! word `head · period · period · ⋯` read from the identity. Translating a
//! ray by `g` means normalizing `g · (long prefix)`, discarding the letters
//! that do not lie below the ray's tail in the heap of that element (a
//! bounded detour which the limiting geodesic does not follow), and reading
//! off prefixes of the lexicographic normal form of what is left.
//!
//! Distances between translated rays use
//! `Σ_{i=1}^{depth} min(d(u_i, v_i), 2^{-i})` with `d` the word metric. This
//! is a proxy for the visual boundary metric and is bounded by 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::ball::ball;
use crate::racg::{self, append_letter, NormalForm, Placement, RacgError};
use crate::system::{CoxeterSystem, SystemError};
use crate::word::{Generator, GeneratorSubset, Word};

/// Printed by every report that contains simulated distances.
pub const PROXY_DISCLAIMER: &str = "note: distances are a word-metric proxy (normal-form ray prefixes, \
word distance capped at 2^-i per level), not the CAT(0) boundary metric of the Davis complex";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("boundary simulation requires a right-angled system")]
    NotRightAngled,
    #[error("a ray period must be a nonempty word")]
    EmptyPeriod,
    #[error("validation horizon {horizon} is below the required {required}")]
    HorizonTooSmall { horizon: usize, required: usize },
    #[error("ray is not reduced: its prefix of length {0} cancels")]
    NotReduced(usize),
    #[error("translated prefixes did not stabilize at depth {depth} (window {window})")]
    Unstable { depth: usize, window: usize },
    #[error("m({s0}, {t0}) is finite")]
    OrderNotInfinite { s0: Generator, t0: Generator },
    #[error("generator {0} has no partner t with m(s, t) = inf")]
    NoInfinitePartner(Generator),
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Racg(#[from] RacgError),
}

/// Eventually periodic infinite word `head · period^∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray {
    head: Word,
    period: Word,
}

impl Ray {
    pub fn new(head: Word, period: Word) -> Result<Self, SimError> {
        if period.is_empty() {
            return Err(SimError::EmptyPeriod);
        }
        Ok(Ray { head, period })
    }

    /// Like [`Ray::new`], additionally requiring every prefix up to the
    /// minimum horizon to be reduced.
    pub fn checked(sys: &CoxeterSystem, head: Word, period: Word) -> Result<Self, SimError> {
        let ray = Ray::new(head, period)?;
        let horizon = ray.min_horizon();
        if let Some(bad) = first_cancelling_prefix(sys, &ray, horizon)? {
            return Err(SimError::NotReduced(bad));
        }
        Ok(ray)
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Smallest horizon accepted by [`validate_ray`].
    pub fn min_horizon(&self) -> usize {
        self.head.len() + 2 * self.period.len()
    }

    /// The `i`-th letter (0-based) of the infinite word.
    pub fn letter(&self, i: usize) -> Generator {
        let h = self.head.len();
        if i < h {
            self.head.letters()[i]
        } else {
            self.period.letters()[(i - h) % self.period.len()]
        }
    }

    /// The first `n` letters as a word.
    pub fn prefix_word(&self, n: usize) -> Word {
        (0..n).map(|i| self.letter(i)).collect()
    }
}

fn require_right_angled(sys: &CoxeterSystem) -> Result<(), SimError> {
    if sys.is_right_angled() {
        Ok(())
    } else {
        Err(SimError::NotRightAngled)
    }
}

fn first_cancelling_prefix(sys: &CoxeterSystem, ray: &Ray, horizon: usize) -> Result<Option<usize>, SimError> {
    require_right_angled(sys)?;
    sys.check_word(&ray.head)?;
    sys.check_word(&ray.period)?;
    let mut x = NormalForm::identity();
    for i in 0..horizon {
        x.push(sys, ray.letter(i));
        if x.len() != i + 1 {
            return Ok(Some(i + 1));
        }
    }
    Ok(None)
}

/// True iff every prefix of length at most `horizon` is reduced.
pub fn validate_ray(sys: &CoxeterSystem, ray: &Ray, horizon: usize) -> Result<bool, SimError> {
    let required = ray.min_horizon();
    if horizon < required {
        return Err(SimError::HorizonTooSmall { horizon, required });
    }
    Ok(first_cancelling_prefix(sys, ray, horizon)?.is_none())
}

/// Normal form of the first `n` letters of the ray.
pub fn ray_prefix(sys: &CoxeterSystem, ray: &Ray, n: usize) -> Result<NormalForm, SimError> {
    Ok(racg::nf(sys, &ray.prefix_word(n))?)
}

/// Letters of `g · (first n letters of the ray)` restricted to the heap
/// elements lying below the last `|period|` ray letters, in normal form.
fn trimmed_translate(sys: &CoxeterSystem, g: &Word, ray: &Ray, n: usize) -> Vec<Generator> {
    let tail_start = n.saturating_sub(ray.period.len());
    let mut letters: Vec<Generator> = Vec::with_capacity(g.len() + n);
    let mut tail: Vec<bool> = Vec::with_capacity(g.len() + n);
    let input = g
        .letters()
        .iter()
        .map(|&s| (s, false))
        .chain((0..n).map(|i| (ray.letter(i), i >= tail_start)));
    for (s, is_tail) in input {
        match append_letter(sys, &mut letters, s) {
            Placement::Cancelled(i) => {
                tail.remove(i);
            }
            Placement::Inserted(i) => tail.insert(i, is_tail),
        }
    }

    // Walking backwards, a letter is below the tail iff it is a tail letter
    // or fails to commute with some letter already known to be below it.
    let mut keep = vec![false; letters.len()];
    let mut above = GeneratorSubset::EMPTY;
    for i in (0..letters.len()).rev() {
        let s = letters[i];
        if tail[i] || !above.is_subset(sys.commuting_with(s)) {
            keep[i] = true;
            above.insert(s);
        }
    }
    let mut out = NormalForm::identity();
    for (s, _) in letters.iter().zip(&keep).filter(|(_, &k)| k) {
        out.push(sys, *s);
    }
    out.into_word().into_letters()
}

/// The first `depth` vertices `u_1, …, u_depth` of the translated ray `g·ray`,
/// each as a normal form of length `i`.
///
/// Uses `N = depth + 2ℓ(g) + |head| + |period|` ray letters and requires the
/// same prefixes at `N + |period|`.
pub fn translate_ray(sys: &CoxeterSystem, g: &Word, ray: &Ray, depth: usize) -> Result<Vec<NormalForm>, SimError> {
    require_right_angled(sys)?;
    sys.check_word(g)?;
    let g_len = NormalForm::of(sys, g).len();
    let window = depth + 2 * g_len + ray.head.len() + ray.period.len();
    let first = trimmed_translate(sys, g, ray, window);
    let second = trimmed_translate(sys, g, ray, window + ray.period.len());
    if first.len() < depth || second.len() < depth || first[..depth] != second[..depth] {
        return Err(SimError::Unstable { depth, window });
    }
    let full = racg::nf(sys, &Word::from(&first[..depth]))?;
    Ok((1..=depth).map(|i| full.prefix(sys, i)).collect())
}

/// `2^{-i}` as an exact rational.
pub fn dyadic(i: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << i)
}

/// Proxy boundary distance between `g·ray_a` and `g·ray_b`.
pub fn proxy_distance(
    sys: &CoxeterSystem,
    g: &Word,
    ray_a: &Ray,
    ray_b: &Ray,
    depth: usize,
) -> Result<BigRational, SimError> {
    let us = translate_ray(sys, g, ray_a, depth)?;
    let vs = translate_ray(sys, g, ray_b, depth)?;
    let mut total = BigRational::zero();
    for (i, (u, v)) in us.iter().zip(&vs).enumerate() {
        if u.word() == v.word() {
            continue;
        }
        let d = BigRational::from_integer(BigInt::from(sys.word_distance(u.word(), v.word())));
        total += d.min(dyadic(i + 1));
    }
    Ok(total)
}

/// `(k, distance)` pairs produced by an experiment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MetricSeries {
    pub entries: Vec<(usize, BigRational)>,
}

impl MetricSeries {
    pub fn min(&self) -> Option<&BigRational> {
        self.entries.iter().map(|(_, d)| d).min()
    }

    pub fn max(&self) -> Option<&BigRational> {
        self.entries.iter().map(|(_, d)| d).max()
    }

    /// First `k` whose distance is strictly below `threshold`.
    pub fn first_below(&self, threshold: &BigRational) -> Option<usize> {
        self.entries.iter().find(|(_, d)| d < threshold).map(|(k, _)| *k)
    }

    /// Whether distances never increase from index `k` on.
    pub fn non_increasing_from(&self, k: usize) -> bool {
        let tail: Vec<_> = self.entries.iter().filter(|(j, _)| *j >= k).map(|(_, d)| d).collect();
        tail.windows(2).all(|p| p[1] <= p[0])
    }

    /// `k,distance` CSV with a header line; distances carry 12 decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,distance\n");
        for (k, d) in &self.entries {
            out.push_str(&format!("{k},{}\n", format_decimal(d, 12)));
        }
        out
    }
}

/// Fixed-point decimal rendering of a non-negative rational, rounded half up.
pub fn format_decimal(value: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = value * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = (scaled + half).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    if digits == 0 {
        return int_part.to_string();
    }
    format!("{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
}

fn require_free_pair(sys: &CoxeterSystem, s0: Generator, t0: Generator) -> Result<(), SimError> {
    sys.check_generator(s0)?;
    sys.check_generator(t0)?;
    if !sys.m(s0, t0).is_infinite() {
        return Err(SimError::OrderNotInfinite { s0, t0 });
    }
    Ok(())
}

/// `g_k = (s₀t₀)^k · x⁻¹`.
pub fn contraction_element(s0: Generator, t0: Generator, x: &Word, k: usize) -> Word {
    Word::new(vec![s0, t0]).power(k).concat(&x.inverse())
}

/// Distances between `g_k·ray_a` and `g_k·ray_b` for `k = 1..=k_max`, where
/// `g_k = (s₀t₀)^k x⁻¹`.
///
/// When `x` pushes the inverted ray prefixes into the piece of `s₀` (see
/// [`liminf_witness`]), both translated rays start with `(s₀t₀)^k`, so the
/// distances fall to 0 once `2k ≥ depth`.
#[allow(clippy::too_many_arguments)]
pub fn liminf_experiment(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    s0: Generator,
    t0: Generator,
    x: &Word,
    k_max: usize,
    depth: usize,
) -> Result<MetricSeries, SimError> {
    require_right_angled(sys)?;
    require_free_pair(sys, s0, t0)?;
    sys.check_word(x)?;
    let entries = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let g = contraction_element(s0, t0, x, k);
            proxy_distance(sys, &g, ray_a, ray_b, depth).map(|d| (k, d))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MetricSeries { entries })
}

/// Parameters for [`liminf_experiment`] derived from the ray prefixes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiminfWitness {
    pub s0: Generator,
    pub t0: Generator,
    pub x: Word,
    pub prefix_len: usize,
}

/// Picks `t₀` (least generator with `m(s₀, t₀) = ∞`) and `x` with
/// `S(w⁻¹x) = S(v⁻¹x) = {s₀}` for the length-`prefix_len` prefixes `w`, `v`
/// of the two rays. Requires an irreducible right-angled system of rank ≥ 3.
pub fn liminf_witness(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    s0: Generator,
    prefix_len: usize,
) -> Result<LiminfWitness, SimError> {
    require_right_angled(sys)?;
    sys.check_generator(s0)?;
    let t0 = sys.free_with(s0).first().ok_or(SimError::NoInfinitePartner(s0))?;
    let w = racg::nf(sys, &ray_a.prefix_word(prefix_len).inverse())?;
    let v = racg::nf(sys, &ray_b.prefix_word(prefix_len).inverse())?;
    let x = racg::joint_push(sys, &w, &v, s0)?;
    Ok(LiminfWitness { s0, t0, x, prefix_len })
}

/// Extremum of the proxy distance over a word-metric ball, with the first
/// element (in ball order) attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub value: BigRational,
    pub witness: Word,
    pub elements: usize,
}

/// Proxy distances for every element of the radius-`radius` ball, in ball
/// order.
fn ball_distances(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
) -> Result<(Vec<Word>, Vec<BigRational>), SimError> {
    require_right_angled(sys)?;
    let elements = ball(sys, radius);
    let values = elements
        .par_iter()
        .map(|g| proxy_distance(sys, g, ray_a, ray_b, depth))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((elements, values))
}

fn scan(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
    want_max: bool,
) -> Result<ScanResult, SimError> {
    let (elements, values) = ball_distances(sys, ray_a, ray_b, radius, depth)?;
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        let better = if want_max { v > &values[best] } else { v < &values[best] };
        if better {
            best = i;
        }
    }
    Ok(ScanResult {
        value: values[best].clone(),
        witness: elements[best].clone(),
        elements: elements.len(),
    })
}

/// Running extremum by radius: entry `r` is the max (or min) over the ball
/// of radius `r`, for `r = 0..=radius`.
fn profile(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
    want_max: bool,
) -> Result<MetricSeries, SimError> {
    let (elements, values) = ball_distances(sys, ray_a, ray_b, radius, depth)?;
    let mut entries: Vec<(usize, BigRational)> = Vec::with_capacity(radius + 1);
    for (g, v) in elements.iter().zip(values) {
        let r = g.len();
        while entries.len() <= r {
            let carried = entries.last().map(|(_, d)| d.clone());
            entries.push((entries.len(), carried.unwrap_or_else(|| v.clone())));
        }
        let slot = &mut entries[r].1;
        if (want_max && v > *slot) || (!want_max && v < *slot) {
            *slot = v;
        }
    }
    // Finite groups may run out of elements before `radius`.
    while entries.len() <= radius {
        let (_, last) = entries.last().cloned().expect("the ball contains the identity");
        entries.push((entries.len(), last));
    }
    Ok(MetricSeries { entries })
}

/// Largest proxy distance over all `g` with `ℓ(g) ≤ radius`.
pub fn limsup_scan(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
) -> Result<ScanResult, SimError> {
    scan(sys, ray_a, ray_b, radius, depth, true)
}

/// Smallest proxy distance over all `g` with `ℓ(g) ≤ radius`.
pub fn obstruction_scan(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
) -> Result<ScanResult, SimError> {
    scan(sys, ray_a, ray_b, radius, depth, false)
}

/// [`limsup_scan`] at every radius `0..=radius`, indexed by radius.
pub fn limsup_profile(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
) -> Result<MetricSeries, SimError> {
    profile(sys, ray_a, ray_b, radius, depth, true)
}

/// [`obstruction_scan`] at every radius `0..=radius`, indexed by radius.
pub fn obstruction_profile(
    sys: &CoxeterSystem,
    ray_a: &Ray,
    ray_b: &Ray,
    radius: usize,
    depth: usize,
) -> Result<MetricSeries, SimError> {
    profile(sys, ray_a, ray_b, radius, depth, false)
}
