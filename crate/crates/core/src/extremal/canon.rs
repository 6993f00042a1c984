//! Canonical labeling by exhaustive search over degree-respecting orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 10;

/// graph6 bytes of the canonical relabeling; equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn graph(&self) -> Graph {
        crate::graph::graph6_decode(self.as_str()).expect("canonical bytes decode")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    /// Required degree at each position (non-increasing).
    target: Vec<u32>,
    perm: Vec<usize>,
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        let p = self.perm.len();
        let mut col = 0u64;
        for (i, &w) in self.perm.iter().enumerate() {
            if self.rows[v] & bit(w) != 0 {
                col |= 1 << (p - 1 - i);
            }
        }
        col
    }

    fn run(&mut self, used: u64) {
        let p = self.perm.len();
        if p == self.n {
            if self.best.as_ref().is_none_or(|b| self.cols < *b) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in bits(!used & (bit(self.n) - 1)) {
            if self.rows[v].count_ones() != self.target[p] {
                continue;
            }
            let col = self.column(v);
            if let Some(best) = &self.best {
                // prefix strictly above the best string cannot win
                let order = self.cols.as_slice().cmp(&best[..p]).then(col.cmp(&best[p]));
                if order == Ordering::Greater {
                    continue;
                }
            }
            self.perm.push(v);
            self.cols.push(col);
            self.run(used | bit(v));
            self.perm.pop();
            self.cols.pop();
        }
    }
}

/// Canonical columns of the graph given by adjacency rows (`n <= 10`).
/// `cols[j]` holds the bits `(0,j), (1,j), ..., (j-1,j)`, most significant first.
pub(crate) fn canonical_columns(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut target: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let mut s = Search {
        rows,
        n,
        target,
        perm: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best: None,
    };
    s.run(0);
    s.best.expect("some order respects the degree sequence")
}

pub(crate) fn form_from_columns(cols: &[u64]) -> CanonicalForm {
    let n = cols.len();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let (mut acc, mut filled) = (0u8, 0);
    for (j, &col) in cols.iter().enumerate().skip(1) {
        for i in 0..j {
            acc = acc << 1 | (col >> (j - 1 - i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    CanonicalForm(out)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::SizeGuard(format!(
            "canonical form limited to n <= {CANON_MAX_ORDER}, got {}",
            g.order()
        )));
    }
    let rows: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    Ok(form_from_columns(&canonical_columns(&rows)))
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.graph())
}
