//! The unicyclic family `U(n, k, g)`: an odd cycle `C_g` joined by a path
//! on `l = n + 1 - g - k` vertices to the center of a star `K_{1,k}`.
//!
//! Fixed labeling:
//!
//! * cycle vertices are `0..g`, consecutive labels adjacent, so the
//!   anticlockwise cycle `v_1, ..., v_g` is `1, 2, ..., g-1, 0`;
//! * the path starts at `v_g` (label 0) and continues with `g, g+1, ...,
//!   g+l-2`; its last vertex is the star center (label 0 itself when `l = 1`);
//! * the `k` leaves take the remaining labels `g+l-1 .. n-1`.

use super::Graph;
use crate::domination::gamma_g_formula;
use crate::error::{Error, Result};

/// Which member of the family is meant: by pendant count or by domination number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Pendants(usize),
    Domination(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: usize,
    pub g: usize,
    pub selector: Selector,
}

fn check_girth(n: usize, g: usize) -> Result<()> {
    if g < 3 || g.is_multiple_of(2) || g >= n {
        return Err(Error::InvalidParams(format!(
            "girth must be odd with 3 <= g < n, got g={g}, n={n}"
        )));
    }
    if n > super::MAX_VERTICES {
        return Err(Error::OrderOutOfRange {
            order: n,
            max: super::MAX_VERTICES,
        });
    }
    Ok(())
}

impl FamilyParams {
    pub fn with_pendants(n: usize, k: usize, g: usize) -> Result<Self> {
        check_girth(n, g)?;
        if k == 0 || k > n - g {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= n-g = {} (path length l = n+1-g-k >= 1), got k={k}",
                n - g
            )));
        }
        Ok(FamilyParams {
            n,
            g,
            selector: Selector::Pendants(k),
        })
    }

    pub fn with_domination(n: usize, gamma: usize, g: usize) -> Result<Self> {
        check_girth(n, g)?;
        let lo = g.div_ceil(3);
        let hi = gamma_g_formula(n, g)?;
        if gamma < lo || gamma > hi {
            return Err(Error::InvalidParams(format!(
                "need ceil(g/3) = {lo} <= gamma <= gamma_g = {hi}, got gamma={gamma}"
            )));
        }
        Ok(FamilyParams {
            n,
            g,
            selector: Selector::Domination(gamma),
        })
    }

    /// Path length `l = n + 1 - g - k` when the star size is known.
    pub fn path_len(&self) -> Option<usize> {
        match self.selector {
            Selector::Pendants(k) => Some(self.n + 1 - self.g - k),
            Selector::Domination(_) => None,
        }
    }
}

/// Labeled anatomy of one `U(n, k, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicyclicLayout {
    pub n: usize,
    pub k: usize,
    pub g: usize,
    /// Cycle vertices `v_1, ..., v_g` in anticlockwise order.
    pub cycle: Vec<usize>,
    /// Path from `v_g` to the star center, both ends included (`l` vertices).
    pub path: Vec<usize>,
    pub leaves: Vec<usize>,
}

impl UnicyclicLayout {
    pub fn new(n: usize, k: usize, g: usize) -> Result<Self> {
        FamilyParams::with_pendants(n, k, g)?;
        let l = n + 1 - g - k;
        let cycle = (1..=g).map(|i| i % g).collect();
        let path = std::iter::once(0).chain(g..g + l - 1).collect();
        let leaves = (g + l - 1..n).collect();
        Ok(UnicyclicLayout {
            n,
            k,
            g,
            cycle,
            path,
            leaves,
        })
    }

    /// `v_i` for `1 <= i <= g`.
    pub fn cycle_vertex(&self, i: usize) -> usize {
        self.cycle[i - 1]
    }

    /// The quasi-pendant vertex carrying the star.
    pub fn center(&self) -> usize {
        *self.path.last().unwrap()
    }

    pub fn path_len(&self) -> usize {
        self.path.len()
    }

    pub fn graph(&self) -> Graph {
        let mut gr = Graph::empty(self.n).expect("order validated");
        for i in 0..self.g {
            gr.add_edge(i, (i + 1) % self.g);
        }
        for w in self.path.windows(2) {
            gr.add_edge(w[0], w[1]);
        }
        let c = self.center();
        for &leaf in &self.leaves {
            gr.add_edge(c, leaf);
        }
        gr
    }
}

/// `U(n, k, g)` in the fixed labeling documented at module level.
pub fn build_u(n: usize, k: usize, g: usize) -> Result<Graph> {
    Ok(UnicyclicLayout::new(n, k, g)?.graph())
}
