//! Exact domination numbers with witnesses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Upper order for the subset-enumeration oracle.
pub const BRUTEFORCE_MAX_ORDER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub gamma: usize,
    /// A minimum dominating set, ascending.
    pub witness: Vec<usize>,
}

fn set_mask(g: &Graph, set: &[usize]) -> Result<u64> {
    set.iter().try_fold(0u64, |m, &v| {
        g.check_vertex(v)?;
        Ok(m | bit(v))
    })
}

fn cover(g: &Graph, mask: u64) -> u64 {
    bits(mask).fold(0, |m, v| m | g.closed_neighbor_mask(v))
}

/// Whether every vertex is in `set` or adjacent to a member of it.
pub fn dominates(g: &Graph, set: &[usize]) -> Result<bool> {
    let m = set_mask(g, set)?;
    Ok(cover(g, m) == g.vertex_mask())
}

fn greedy(closed: &[u64], full: u64) -> Vec<usize> {
    let mut dominated = 0;
    let mut picked = Vec::new();
    while dominated != full {
        let undominated = full & !dominated;
        let v = (0..closed.len())
            .max_by_key(|&v| ((closed[v] & undominated).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        picked.push(v);
        dominated |= closed[v];
    }
    picked
}

struct BranchAndBound {
    closed: Vec<u64>,
    full: u64,
    chosen: Vec<usize>,
    best: Vec<usize>,
    bound: usize,
}

impl BranchAndBound {
    fn search(&mut self, dominated: u64) {
        if dominated == self.full {
            if self.chosen.len() < self.bound {
                self.bound = self.chosen.len();
                self.best = self.chosen.clone();
            }
            return;
        }
        let undominated = self.full & !dominated;
        let max_gain = self
            .closed
            .iter()
            .map(|c| (c & undominated).count_ones())
            .max()
            .unwrap();
        let lower = (undominated.count_ones()).div_ceil(max_gain) as usize;
        if self.chosen.len() + lower >= self.bound {
            return;
        }
        // Branch on the undominated vertex with the fewest possible dominators.
        let pivot = bits(undominated)
            .min_by_key(|&w| (self.closed[w].count_ones(), w))
            .unwrap();
        for c in bits(self.closed[pivot]) {
            self.chosen.push(c);
            self.search(dominated | self.closed[c]);
            self.chosen.pop();
        }
    }
}

/// Exact domination number by branch and bound.
///
/// Branches on the undominated vertex with the smallest closed neighborhood,
/// trying its dominators in ascending order; the witness is the first
/// minimum set met in that order. Worst case is exponential in `n`.
pub fn domination_number(g: &Graph) -> DominationCertificate {
    let closed: Vec<u64> = (0..g.order()).map(|v| g.closed_neighbor_mask(v)).collect();
    let full = g.vertex_mask();
    let seed = greedy(&closed, full);
    let mut bb = BranchAndBound {
        closed,
        full,
        chosen: Vec::new(),
        bound: seed.len() + 1,
        best: seed,
    };
    bb.search(0);
    let mut witness = bb.best;
    witness.sort_unstable();
    DominationCertificate {
        gamma: witness.len(),
        witness,
    }
}

/// Subset enumeration by increasing size; the first dominating subset in
/// lexicographic order is returned. Independent of [`domination_number`].
pub fn domination_number_bruteforce(g: &Graph) -> Result<DominationCertificate> {
    let n = g.order();
    if n > BRUTEFORCE_MAX_ORDER {
        return Err(Error::SizeGuard(format!(
            "brute-force domination limited to n <= {BRUTEFORCE_MAX_ORDER}, got {n}"
        )));
    }
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if dominates(g, &idx)? {
                return Ok(DominationCertificate {
                    gamma: size,
                    witness: idx,
                });
            }
            // next combination
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// Domination number of `U(n, 1, g)`: `ceil((n-1)/3)` when `3 | g`, else `ceil(n/3)`.
pub fn gamma_g_formula(n: usize, g: usize) -> Result<usize> {
    if g < 3 || g.is_multiple_of(2) || g >= n {
        return Err(Error::InvalidParams(format!(
            "girth must be odd with 3 <= g < n, got g={g}, n={n}"
        )));
    }
    Ok(if g.is_multiple_of(3) {
        (n - 1).div_ceil(3)
    } else {
        n.div_ceil(3)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_u;
    use proptest::prelude::*;

    #[test]
    fn dominates_examples() {
        assert!(dominates(&Graph::star(5).unwrap(), &[0]).unwrap());
        assert!(dominates(&Graph::cycle(6).unwrap(), &[0, 3]).unwrap());
        assert!(!dominates(&Graph::path(4).unwrap(), &[0]).unwrap());
        assert!(dominates(&Graph::path(4).unwrap(), &[9]).is_err());
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&Graph::star(5).unwrap()).gamma, 1);
        assert_eq!(domination_number(&Graph::cycle(6).unwrap()).gamma, 2);
        assert_eq!(domination_number(&Graph::path(7).unwrap()).gamma, 3);
        let u = build_u(7, 1, 3).unwrap();
        let cert = domination_number(&u);
        assert_eq!(cert.gamma, 2);
        assert!(dominates(&u, &cert.witness).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        for n in 1..=8 {
            assert_eq!(domination_number_bruteforce(&Graph::complete(n).unwrap()).unwrap().gamma, 1);
            let e = Graph::empty(n).unwrap();
            assert_eq!(domination_number_bruteforce(&e).unwrap().gamma, n);
            assert_eq!(domination_number(&e).gamma, n);
        }
        assert_eq!(domination_number_bruteforce(&Graph::cycle(6).unwrap()).unwrap().gamma, 2);
        assert_eq!(domination_number_bruteforce(&Graph::path(7).unwrap()).unwrap().gamma, 3);
        assert!(domination_number_bruteforce(&Graph::empty(21).unwrap()).is_err());
    }

    #[test]
    fn witness_is_deterministic() {
        let g = Graph::cycle(9).unwrap();
        let a = domination_number(&g);
        assert_eq!(a, domination_number(&g));
        assert_eq!(a.gamma, 3);
    }

    #[test]
    fn gamma_g_examples() {
        assert_eq!(gamma_g_formula(10, 3).unwrap(), 3);
        assert_eq!(gamma_g_formula(10, 5).unwrap(), 4);
        assert!(gamma_g_formula(10, 4).is_err());
        assert!(gamma_g_formula(5, 5).is_err());
        for n in 5..=20 {
            let exact = domination_number(&build_u(n, 1, 3).unwrap()).gamma;
            assert_eq!(gamma_g_formula(n, 3).unwrap(), exact, "n = {n}");
        }
        for n in 4..=20 {
            for g in (3..n).step_by(2) {
                let exact = domination_number(&build_u(n, 1, g).unwrap()).gamma;
                assert_eq!(gamma_g_formula(n, g).unwrap(), exact, "n = {n}, g = {g}");
            }
        }
    }

    #[test]
    fn gamma_nonincreasing_in_k() {
        for n in 5..=18 {
            for g in (3..n).step_by(2) {
                let gammas: Vec<usize> = (1..=n - g)
                    .map(|k| domination_number(&build_u(n, k, g).unwrap()).gamma)
                    .collect();
                assert!(gammas.windows(2).all(|w| w[1] <= w[0]), "n={n} g={g}: {gammas:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn matches_bruteforce(n in 1usize..=12, mask in any::<u64>()) {
            let g = Graph::from_upper_mask(n, mask).unwrap();
            let fast = domination_number(&g);
            let slow = domination_number_bruteforce(&g).unwrap();
            prop_assert_eq!(fast.gamma, slow.gamma);
            prop_assert!(dominates(&g, &fast.witness).unwrap());
        }
    }
}
