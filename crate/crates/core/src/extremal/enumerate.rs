//! Exhaustive enumeration of isomorphism classes of small graphs.
//!
//! Every labeled graph on `n` vertices is visited as an upper-triangle
//! bitmask. Only labelings with non-increasing degrees are kept (every class
//! has one), the cheap filters run on the raw rows, and survivors are
//! deduplicated by canonical form. Work units fix the adjacency row of
//! vertex 0 and run in parallel; results merge into one ordered set.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

use super::canon::{canonical_columns, form_from_columns, CanonicalForm};

/// Default order limit.
pub const ENUM_MAX_ORDER: usize = 7;
/// Order reachable with [`EnumOptions::allow_large`].
pub const ENUM_LARGE_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected: bool,
    pub non_bipartite: bool,
    pub unicyclic: bool,
    pub gamma: Option<usize>,
    pub odd_girth: Option<usize>,
}

impl GraphFilter {
    /// Connected non-bipartite graphs.
    pub fn connected_non_bipartite() -> Self {
        GraphFilter {
            connected: true,
            non_bipartite: true,
            ..Default::default()
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.non_bipartite || !g.is_bipartite())
            && (!self.unicyclic || g.is_unicyclic())
            && self.odd_girth.is_none_or(|og| g.odd_girth() == Some(og))
            && self.gamma.is_none_or(|gm| domination_number(g).gamma == gm)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Permits `n = 8` (2^28 labeled graphs).
    pub allow_large: bool,
}

fn check_order(n: usize, opts: EnumOptions) -> Result<()> {
    let cap = if opts.allow_large {
        ENUM_LARGE_ORDER
    } else {
        ENUM_MAX_ORDER
    };
    if n == 0 || n > cap {
        let hint = if n == ENUM_LARGE_ORDER {
            " (n = 8 needs allow_large)"
        } else {
            ""
        };
        return Err(Error::SizeGuard(format!(
            "enumeration supports 1 <= n <= {cap}, got {n}{hint}"
        )));
    }
    Ok(())
}

fn connected(rows: &[u64]) -> bool {
    let full = bit(rows.len()) - 1;
    let (mut seen, mut frontier) = (1u64, 1u64);
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, v| m | rows[v]) & !seen;
        seen |= next;
        frontier = next;
    }
    seen == full
}

fn bipartite(rows: &[u64]) -> bool {
    let n = rows.len();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::with_capacity(n);
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for w in bits(rows[u]) {
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Canonical forms of all classes on `n` vertices passing the structural
/// part of `filter` (connected / non-bipartite / unicyclic).
fn structural_classes(n: usize, filter: &GraphFilter) -> BTreeSet<CanonicalForm> {
    if n == 1 {
        let rows = [0u64];
        let ok = !filter.non_bipartite && !filter.unicyclic;
        return if ok {
            BTreeSet::from([form_from_columns(&canonical_columns(&rows))])
        } else {
            BTreeSet::new()
        };
    }
    // pairs not touching vertex 0, in any fixed order
    let rest_pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|j| (1..j).map(move |i| (i, j)))
        .collect();
    let rest_count = rest_pairs.len();
    let units: Vec<u64> = (0..1u64 << (n - 1)).collect();

    units
        .par_iter()
        .map(|&row0| {
            let mut found = BTreeSet::new();
            let base: Vec<u64> = (0..n)
                .map(|v| if v == 0 { row0 << 1 } else { row0 >> (v - 1) & 1 })
                .collect();
            let mut rows = vec![0u64; n];
            for mask in 0..1u64 << rest_count {
                if filter.unicyclic && row0.count_ones() + mask.count_ones() != n as u32 {
                    continue;
                }
                rows.copy_from_slice(&base);
                for b in bits(mask) {
                    let (i, j) = rest_pairs[b];
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                if rows.windows(2).any(|w| w[0].count_ones() < w[1].count_ones()) {
                    continue;
                }
                if (filter.connected || filter.unicyclic) && !connected(&rows) {
                    continue;
                }
                if filter.non_bipartite && bipartite(&rows) {
                    continue;
                }
                found.insert(form_from_columns(&canonical_columns(&rows)));
            }
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// One representative per isomorphism class satisfying `filter`, in
/// ascending canonical order.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter, opts: EnumOptions) -> Result<Vec<Graph>> {
    check_order(n, opts)?;
    let forms: Vec<CanonicalForm> = structural_classes(n, filter).into_iter().collect();
    let keep: Vec<Option<Graph>> = forms
        .par_iter()
        .map(|f| {
            let g = f.graph();
            filter.accepts(&g).then_some(g)
        })
        .collect();
    Ok(keep.into_iter().flatten().collect())
}
