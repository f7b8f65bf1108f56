//! Coxeter matrices with entries in `{1, 2, 3, …} ∪ {∞}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One Coxeter-matrix entry: the order of `st`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_infinite(self) -> bool {
        matches!(self, Order::Infinite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }

    /// True for an edge of the Coxeter diagram (`m ≥ 3` or `∞`).
    pub fn is_diagram_edge(self) -> bool {
        match self {
            Order::Finite(m) => m >= 3,
            Order::Infinite => true,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid matrix entry {0:?}: expected a positive integer or `inf`")]
pub struct ParseOrderError(pub String);

impl FromStr for Order {
    type Err = ParseOrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Order::Infinite);
        }
        match s.parse::<u32>() {
            Ok(m) if m >= 1 => Ok(Order::Finite(m)),
            _ => Err(ParseOrderError(s.to_string())),
        }
    }
}

/// Square table of [`Order`]s. Shape is checked here; the Coxeter axioms are
/// checked when a [`CoxeterSystem`](crate::CoxeterSystem) is built from it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Order>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("matrix row {row} has {len} entries, expected {rank}")]
pub struct RaggedMatrix {
    pub row: usize,
    pub len: usize,
    pub rank: usize,
}

impl CoxeterMatrix {
    pub fn from_rows(rows: Vec<Vec<Order>>) -> Result<Self, RaggedMatrix> {
        let rank = rows.len();
        let mut entries = Vec::with_capacity(rank * rank);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != rank {
                return Err(RaggedMatrix {
                    row,
                    len: r.len(),
                    rank,
                });
            }
            entries.extend(r);
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Builds a matrix from `f(i, j)` for every ordered pair.
    pub fn from_fn(rank: usize, mut f: impl FnMut(usize, usize) -> Order) -> Self {
        let mut entries = Vec::with_capacity(rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                entries.push(f(i, j));
            }
        }
        CoxeterMatrix { rank, entries }
    }

    /// Symmetric matrix with 1 on the diagonal and `off(i, j)` for `i < j`.
    pub fn symmetric(rank: usize, mut off: impl FnMut(usize, usize) -> Order) -> Self {
        Self::from_fn(rank, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => Order::Finite(1),
            std::cmp::Ordering::Less => off(i, j),
            std::cmp::Ordering::Greater => off(j, i),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> Order {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Order]> {
        self.entries.chunks(self.rank.max(1)).take(self.rank)
    }
}
