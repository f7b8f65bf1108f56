//! Small named systems used throughout the docs, tests and CLI fixtures.

use crate::matrix::{CoxeterMatrix, Order};
use crate::system::CoxeterSystem;

fn default_labels(rank: usize) -> Vec<String> {
    if rank <= 26 {
        (0..rank).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..rank).map(|i| format!("s{i}")).collect()
    }
}

/// System with labels `a, b, c, …` and `m(i, j) = off(i, j)` for `i < j`.
pub fn system_from_fn(rank: usize, off: impl FnMut(usize, usize) -> Order) -> CoxeterSystem {
    CoxeterSystem::new(CoxeterMatrix::symmetric(rank, off), default_labels(rank))
        .expect("catalog systems are valid")
}

/// `D∞ = ⟨a, b⟩` with `m(a, b) = ∞`.
pub fn infinite_dihedral() -> CoxeterSystem {
    free(2)
}

/// Dihedral group of order `2m` on `t1, t2`.
pub fn dihedral(m: u32) -> CoxeterSystem {
    CoxeterSystem::new(
        CoxeterMatrix::symmetric(2, |_, _| Order::Finite(m)),
        vec!["t1".into(), "t2".into()],
    )
    .expect("m >= 2")
}

/// Free product of `rank` copies of `Z/2`: every off-diagonal entry is `∞`.
pub fn free(rank: usize) -> CoxeterSystem {
    system_from_fn(rank, |_, _| Order::Infinite)
}

/// `(Z/2)^rank`: every off-diagonal entry is 2.
pub fn commuting(rank: usize) -> CoxeterSystem {
    system_from_fn(rank, |_, _| Order::Finite(2))
}

/// `D∞ × D∞` on `a, b, c, d` with `m(a,b) = m(c,d) = ∞`.
pub fn dinf_squared() -> CoxeterSystem {
    system_from_fn(4, |i, j| match (i, j) {
        (0, 1) | (2, 3) => Order::Infinite,
        _ => Order::Finite(2),
    })
}

/// `D∞ × Z/2` on `a, b, c`: `m(a, b) = ∞` and `c` central.
pub fn dinf_times_z2() -> CoxeterSystem {
    system_from_fn(3, |i, j| match (i, j) {
        (0, 1) => Order::Infinite,
        _ => Order::Finite(2),
    })
}

/// Right-angled pentagon group: consecutive generators of a 5-cycle commute,
/// all other pairs have `m = ∞`.
pub fn five_cycle() -> CoxeterSystem {
    cycle_commutation(5)
}

/// Right-angled system whose commutation graph is the `n`-cycle.
pub fn cycle_commutation(n: usize) -> CoxeterSystem {
    system_from_fn(n, |i, j| {
        if j == i + 1 || (i == 0 && j == n - 1) {
            Order::Finite(2)
        } else {
            Order::Infinite
        }
    })
}

/// Non-right-angled rank-4 example on `s, t1, t2, t3`:
/// `m(t1,t2) = m(t1,t3) = 4`, `m(t2,t3) = 2`, `m(s,t1) = m(s,t2) = 2`,
/// `m(s,t3) = ∞`. `{t1,t2,t3}` is affine; `{s,t1,t2}` is finite.
pub fn figure_one() -> CoxeterSystem {
    let labels = ["s", "t1", "t2", "t3"].map(String::from).to_vec();
    let matrix = CoxeterMatrix::symmetric(4, |i, j| match (i, j) {
        (1, 2) | (1, 3) => Order::Finite(4),
        (0, 3) => Order::Infinite,
        _ => Order::Finite(2),
    });
    CoxeterSystem::new(matrix, labels).expect("valid")
}

/// Right-angled system of rank `n` from a commutation-graph edge mask: bit
/// `k` of `mask` refers to the `k`-th pair `(i, j)`, `i < j`, in row-major
/// order. A set bit means the pair commutes; a clear bit means `m = ∞`.
pub fn right_angled_from_mask(n: usize, mask: u64) -> CoxeterSystem {
    let mut index = std::collections::HashMap::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            index.insert((i, j), k);
            k += 1;
        }
    }
    system_from_fn(n, |i, j| {
        if mask >> index[&(i, j)] & 1 == 1 {
            Order::Finite(2)
        } else {
            Order::Infinite
        }
    })
}
