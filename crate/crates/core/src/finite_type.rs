//! Spherical-subset recognition via the finite-type classification.
//!
//! `W_T` is finite iff every connected component of the Coxeter diagram
//! induced on `T` is one of `A_n`, `B_n`, `D_n`, `E_6`, `E_7`, `E_8`, `F_4`,
//! `H_3`, `H_4` or a dihedral `I_2(m)` with finite `m`.

use std::fmt;

use crate::matrix::Order;
use crate::system::CoxeterSystem;
use crate::word::{Generator, GeneratorSubset};

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral of order `2m`; `I2(3) = A2`, `I2(4) = B2`, `I2(5) = H2`,
    /// `I2(6) = G2` are reported here when the rank is 2.
    I2(u32),
}

impl FiniteType {
    /// Group order, when it fits in a `u64`.
    pub fn order(self) -> Option<u64> {
        let factorial = |n: u64| (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k));
        match self {
            FiniteType::A(n) => factorial(n as u64 + 1),
            FiniteType::B(n) => factorial(n as u64)?.checked_mul(1u64.checked_shl(n as u32)?),
            FiniteType::D(n) => factorial(n as u64)?.checked_mul(1u64.checked_shl(n as u32 - 1)?),
            FiniteType::E6 => Some(51_840),
            FiniteType::E7 => Some(2_903_040),
            FiniteType::E8 => Some(696_729_600),
            FiniteType::F4 => Some(1_152),
            FiniteType::H3 => Some(120),
            FiniteType::H4 => Some(14_400),
            FiniteType::I2(m) => Some(2 * m as u64),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::E7 => f.write_str("E7"),
            FiniteType::E8 => f.write_str("E8"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H3 => f.write_str("H3"),
            FiniteType::H4 => f.write_str("H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl CoxeterSystem {
    /// Whether `W_T` is finite. `W_∅` is trivial, hence spherical.
    pub fn is_spherical(&self, t: GeneratorSubset) -> bool {
        self.finite_decomposition(t).is_some()
    }

    /// Finite types of the components of `T`'s diagram, or `None` when
    /// `W_T` is infinite.
    pub fn finite_decomposition(&self, t: GeneratorSubset) -> Option<Vec<FiniteType>> {
        debug_assert!(t.is_subset(self.all()));
        self.diagram_components(t)
            .into_iter()
            .map(|c| classify_component(self, c))
            .collect()
    }

    /// Connected components of the diagram restricted to `t`, where `s – u`
    /// is an edge when `m(s, u) ≥ 3` (including `∞`). Sorted by least member.
    pub fn diagram_components(&self, t: GeneratorSubset) -> Vec<GeneratorSubset> {
        let mut remaining = t;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = GeneratorSubset::singleton(start);
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for u in remaining.iter() {
                    if !comp.contains(u) && self.m(s, u).is_diagram_edge() {
                        comp.insert(u);
                        stack.push(u);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }
}

/// Classifies one connected diagram component.
fn classify_component(sys: &CoxeterSystem, comp: GeneratorSubset) -> Option<FiniteType> {
    let nodes: Vec<Generator> = comp.iter().collect();
    let n = nodes.len();
    let mut edges = Vec::new();
    for (i, &s) in nodes.iter().enumerate() {
        for &t in &nodes[i + 1..] {
            match sys.m(s, t) {
                Order::Infinite => return None,
                Order::Finite(m) if m >= 3 => edges.push((s, t, m)),
                Order::Finite(_) => {}
            }
        }
    }
    match n {
        1 => return Some(FiniteType::A(1)),
        2 => return Some(FiniteType::I2(edges[0].2)),
        _ => {}
    }
    // A connected graph on n nodes is a tree iff it has n - 1 edges.
    if edges.len() != n - 1 {
        return None;
    }
    if edges.iter().any(|&(_, _, m)| m > 5) {
        return None;
    }
    let degree = |v: Generator| edges.iter().filter(|&&(a, b, _)| a == v || b == v).count();
    let neighbors = |v: Generator| {
        edges
            .iter()
            .filter_map(move |&(a, b, m)| match v {
                _ if a == v => Some((b, m)),
                _ if b == v => Some((a, m)),
                _ => None,
            })
            .collect::<Vec<_>>()
    };

    let branch: Vec<Generator> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    if !branch.is_empty() {
        if branch.len() > 1 || degree(branch[0]) > 3 || edges.iter().any(|e| e.2 != 3) {
            return None;
        }
        // Arm lengths of the star T(p, q, r).
        let center = branch[0];
        let mut arms: Vec<usize> = neighbors(center)
            .into_iter()
            .map(|(first, _)| {
                let (mut prev, mut cur, mut len) = (center, first, 1);
                loop {
                    let next: Vec<_> = neighbors(cur).into_iter().filter(|&(x, _)| x != prev).collect();
                    match next.as_slice() {
                        [] => break len,
                        [(x, _)] => {
                            prev = cur;
                            cur = *x;
                            len += 1;
                        }
                        _ => unreachable!("only one branch node"),
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => Some(FiniteType::D(n)),
            [1, 2, 2] => Some(FiniteType::E6),
            [1, 2, 3] => Some(FiniteType::E7),
            [1, 2, 4] => Some(FiniteType::E8),
            _ => None,
        };
    }

    // A path: read its labels from one end.
    let end = nodes.iter().copied().find(|&v| degree(v) == 1)?;
    let mut labels = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, end);
    loop {
        let next: Vec<_> = neighbors(cur).into_iter().filter(|&(x, _)| x != prev).collect();
        match next.as_slice() {
            [] => break,
            [(x, m)] => {
                labels.push(*m);
                prev = cur;
                cur = *x;
            }
            _ => unreachable!("path nodes have degree at most 2"),
        }
    }
    let heavy: Vec<(usize, u32)> = labels
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m > 3)
        .map(|(i, &m)| (i, m))
        .collect();
    let at_end = |i: usize| i == 0 || i == labels.len() - 1;
    match heavy.as_slice() {
        [] => Some(FiniteType::A(n)),
        [(i, 4)] if at_end(*i) => Some(FiniteType::B(n)),
        [(1, 4)] if n == 4 => Some(FiniteType::F4),
        [(_, 5)] if n == 3 => Some(FiniteType::H3),
        [(i, 5)] if n == 4 && at_end(*i) => Some(FiniteType::H4),
        _ => None,
    }
}
