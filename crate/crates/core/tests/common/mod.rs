#![allow(clippy::needless_range_loop)]

//! Independent oracles for integration tests.
//!
//! Elements are represented by integer matrices of the Kac–Moody
//! realization of the Coxeter group (a generalized Cartan matrix with
//! `a_ij a_ji = 4cos²(π/m)`), which exists for `m ∈ {2, 3, 4, 6, ∞}`. Nothing
//! here goes through the crate's word-problem code.

#![allow(dead_code)]

use std::collections::HashMap;

use coxeter_boundary::{catalog, CoxeterSystem, Generator, GeneratorSubset, Order, Word};
use rand::Rng;

pub type Matrix = Vec<Vec<i128>>;

pub struct Cartan {
    n: usize,
    generators: Vec<Matrix>,
}

impl Cartan {
    /// `None` when some entry is not in `{2, 3, 4, 6, ∞}`.
    pub fn of(sys: &CoxeterSystem) -> Option<Self> {
        let n = sys.rank();
        let mut a = vec![vec![0i128; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            for j in i + 1..n {
                let (x, y) = match sys.m(i, j) {
                    Order::Finite(2) => (0, 0),
                    Order::Finite(3) => (-1, -1),
                    Order::Finite(4) => (-1, -2),
                    Order::Finite(6) => (-1, -3),
                    Order::Infinite => (-2, -2),
                    _ => return None,
                };
                a[i][j] = x;
                a[j][i] = y;
            }
        }
        // s_i(α_j) = α_j − a_ij α_i, stored column by column.
        let generators = (0..n)
            .map(|i| {
                let mut m = identity(n);
                for j in 0..n {
                    m[i][j] -= a[i][j];
                }
                m
            })
            .collect();
        Some(Cartan { n, generators })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn generator(&self, s: Generator) -> &Matrix {
        &self.generators[s]
    }

    pub fn element(&self, word: &[Generator]) -> Matrix {
        word.iter().fold(identity(self.n), |acc, &s| mul(&acc, &self.generators[s]))
    }

    /// `s` with `ℓ(ws) < ℓ(w)`, i.e. `w(α_s)` is a negative root.
    pub fn right_descents_of(&self, m: &Matrix) -> GeneratorSubset {
        (0..self.n).filter(|&s| (0..self.n).all(|k| m[k][s] <= 0)).collect()
    }

    pub fn right_descents(&self, word: &[Generator]) -> GeneratorSubset {
        self.right_descents_of(&self.element(word))
    }

    pub fn left_descents(&self, word: &[Generator]) -> GeneratorSubset {
        let rev: Vec<_> = word.iter().rev().copied().collect();
        self.right_descents(&rev)
    }

    /// Length by repeatedly stripping a right descent.
    pub fn length(&self, word: &[Generator]) -> usize {
        let mut m = self.element(word);
        let mut len = 0;
        while let Some(s) = self.right_descents_of(&m).first() {
            m = mul(&m, &self.generators[s]);
            len += 1;
        }
        assert_eq!(m, identity(self.n));
        len
    }

    /// Lexicographically least reduced word: repeatedly peel off the least
    /// left descent.
    pub fn lex_least(&self, word: &[Generator]) -> Vec<Generator> {
        let rev: Vec<_> = word.iter().rev().copied().collect();
        let mut inv = self.element(&rev);
        let mut out = Vec::new();
        while let Some(s) = self.right_descents_of(&inv).first() {
            out.push(s);
            inv = mul(&inv, &self.generators[s]);
        }
        out
    }

    pub fn same_element(&self, u: &[Generator], v: &[Generator]) -> bool {
        self.element(u) == self.element(v)
    }
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut c = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Breadth-first Cayley graph of the group out to `radius`, keyed by
/// element matrix.
pub fn cayley_distances(cartan: &Cartan, radius: usize) -> HashMap<Matrix, usize> {
    let mut dist = HashMap::new();
    let start = identity(cartan.rank());
    dist.insert(start.clone(), 0);
    let mut frontier = vec![start];
    for r in 1..=radius {
        let mut next = Vec::new();
        for m in &frontier {
            for s in 0..cartan.rank() {
                let nb = mul(m, cartan.generator(s));
                if !dist.contains_key(&nb) {
                    dist.insert(nb.clone(), r);
                    next.push(nb);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Elements of `W_T` counted by closure under generators of `T`, giving up
/// once `cap` is exceeded.
pub fn parabolic_order(cartan: &Cartan, t: GeneratorSubset, cap: usize) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    let start = identity(cartan.rank());
    seen.insert(start.clone());
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for s in t.iter() {
            let nb = mul(&m, cartan.generator(s));
            if seen.insert(nb.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(nb);
            }
        }
    }
    Some(seen.len())
}

/// All words of length `len` over `rank` letters.
pub fn all_words(rank: usize, len: usize) -> impl Iterator<Item = Vec<Generator>> {
    let total = rank.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut w = Vec::with_capacity(len);
        for _ in 0..len {
            w.push(code % rank);
            code /= rank;
        }
        w
    })
}

pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..rank)).collect()
}

/// Number of pairs of an `n`-element set.
pub fn pair_count(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// Commuting pairs of a right-angled system as a mask in the layout used by
/// `catalog::right_angled_from_mask`.
pub fn commutation_mask(sys: &CoxeterSystem) -> u64 {
    let n = sys.rank();
    let mut mask = 0u64;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if sys.commutes(i, j) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut index = vec![vec![0usize; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            index[i][j] = k;
            index[j][i] = k;
            k += 1;
        }
    }
    let mut out = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> index[i][j] & 1 == 1 {
                out |= 1 << index[perm[i]][perm[j]];
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One right-angled system per commutation graph on `n` vertices up to
/// isomorphism (the least mask in each orbit).
pub fn right_angled_up_to_iso(n: usize) -> Vec<CoxeterSystem> {
    let perms = permutations(n);
    let pairs = pair_count(n);
    (0..1u64 << pairs)
        .filter(|&mask| perms.iter().all(|p| permute_mask(n, mask, p) >= mask))
        .map(|mask| catalog::right_angled_from_mask(n, mask))
        .collect()
}

/// Every labelled right-angled system of rank `n`.
pub fn right_angled_labelled(n: usize) -> Vec<CoxeterSystem> {
    (0..1u64 << pair_count(n)).map(|mask| catalog::right_angled_from_mask(n, mask)).collect()
}

/// Connectivity of the `m = ∞` graph, by union-find.
pub fn free_graph_connected(sys: &CoxeterSystem) -> bool {
    let n = sys.rank();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..n {
        for j in i + 1..n {
            if sys.m(i, j).is_infinite() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).all(|i| find(&mut parent, i) == find(&mut parent, 0))
}

/// Brute-force search for `S̃ = A ⊔ B` with all cross pairs commuting and
/// both parts infinite (a part of a right-angled system is infinite iff it
/// contains a pair with `m = ∞`).
pub fn brute_force_racg_product(sys: &CoxeterSystem, tilde: GeneratorSubset) -> bool {
    let members: Vec<_> = tilde.iter().collect();
    if members.len() < 4 {
        return false;
    }
    let infinite = |part: &[Generator]| {
        part.iter().any(|&s| part.iter().any(|&t| sys.m(s, t).is_infinite()))
    };
    let k = members.len();
    (1..(1u64 << (k - 1))).any(|bits| {
        let (mut a, mut b) = (Vec::new(), vec![members[k - 1]]);
        for (i, &s) in members[..k - 1].iter().enumerate() {
            if bits >> i & 1 == 1 {
                a.push(s);
            } else {
                b.push(s);
            }
        }
        infinite(&a) && infinite(&b) && a.iter().all(|&s| b.iter().all(|&t| sys.commutes(s, t)))
    })
}

/// A fixed corpus of ten right-angled systems of rank at most 5.
pub fn racg_corpus() -> Vec<(&'static str, CoxeterSystem)> {
    vec![
        ("infinite dihedral", catalog::infinite_dihedral()),
        ("free rank 3", catalog::free(3)),
        ("free rank 4", catalog::free(4)),
        ("free rank 5", catalog::free(5)),
        ("commuting rank 3", catalog::commuting(3)),
        ("dinf x z2", catalog::dinf_times_z2()),
        ("dinf squared", catalog::dinf_squared()),
        ("five cycle", catalog::five_cycle()),
        // Commutation graph a-b-c-d (a path).
        ("path commutation 4", catalog::right_angled_from_mask(4, 0b101001)),
        // Commutation graph a star centred at a.
        ("star commutation 5", catalog::right_angled_from_mask(5, 0b1111)),
    ]
}

/// Irreducible members of [`racg_corpus`] of rank at least 3.
pub fn irreducible_corpus() -> Vec<(&'static str, CoxeterSystem)> {
    racg_corpus()
        .into_iter()
        .filter(|(_, sys)| sys.rank() >= 3 && free_graph_connected(sys))
        .collect()
}

pub const ORACLE_ORDERS: [Order; 5] = [
    Order::Finite(2),
    Order::Finite(3),
    Order::Finite(4),
    Order::Finite(6),
    Order::Infinite,
];

/// System on `a, b, …` whose `k`-th pair (row-major) gets
/// `ORACLE_ORDERS[choices[k] % 5]`.
pub fn system_from_choices(rank: usize, choices: &[usize]) -> CoxeterSystem {
    let mut k = 0;
    let mut entries = HashMap::new();
    for i in 0..rank {
        for j in i + 1..rank {
            entries.insert((i, j), ORACLE_ORDERS[choices.get(k).copied().unwrap_or(0) % 5]);
            k += 1;
        }
    }
    catalog::system_from_fn(rank, |i, j| entries[&(i, j)])
}
