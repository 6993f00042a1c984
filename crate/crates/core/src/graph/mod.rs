//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Each vertex owns one `u64` adjacency row, so neighborhoods, closed
//! neighborhoods and covers are single-word operations.

mod family;
mod graph6;
mod predicates;

pub use family::{build_u, FamilyParams, Selector, UnicyclicLayout};
pub use graph6::{graph6_decode, graph6_encode, GRAPH6_MAX_ORDER};
pub use predicates::{is_cycle_in, Bipartition};

use crate::error::{Error, Result};

/// Hard vertex cap of the bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange {
                order: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from its upper-triangle bitmask, pairs ordered
    /// `(0,1), (0,2), (1,2), (0,3), ...` (column-major, as in graph6).
    pub fn from_upper_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mut b = 0;
        for j in 1..n {
            for i in 0..j {
                if b < 64 && mask >> b & 1 == 1 {
                    g.add_edge(i, j);
                }
                b += 1;
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("path needs n >= 1".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    /// Star `K_{1,k}` with center 0 and leaves `1..=k`.
    pub fn star(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("star needs k >= 1".into()));
        }
        let mut g = Graph::empty(k + 1)?;
        for v in 1..=k {
            g.add_edge(0, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Open neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood of `v` as a bitset.
    #[inline]
    pub fn closed_neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`, ascending by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            out.extend(bits(self.adj[u]).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: perm.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidParams("relabeling is not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        g.add_edge(u, v);
        Ok(g)
    }

    /// Copy with the edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= GRAPH6_MAX_ORDER {
            f.write_str(&graph6_encode(self).expect("order checked"))
        } else {
            write!(f, "{:?}", self)
        }
    }
}

/// Coalescence of `g1` and `g2`, identifying `v` in `g1` with `u` in `g2`.
///
/// Labels of `g1` are kept. `u` maps onto `v`; the other vertices of `g2`
/// follow in their original order, starting at `g1.order()`. The second
/// component of the result is that map for every vertex of `g2`.
pub fn coalesce(g1: &Graph, v: usize, g2: &Graph, u: usize) -> Result<(Graph, Vec<usize>)> {
    g1.check_vertex(v)?;
    g2.check_vertex(u)?;
    let n = g1.order() + g2.order() - 1;
    if n > MAX_VERTICES {
        return Err(Error::OrderOutOfRange {
            order: n,
            max: MAX_VERTICES,
        });
    }
    let map: Vec<usize> = (0..g2.order())
        .map(|w| match w.cmp(&u) {
            std::cmp::Ordering::Less => g1.order() + w,
            std::cmp::Ordering::Equal => v,
            std::cmp::Ordering::Greater => g1.order() + w - 1,
        })
        .collect();
    let mut g = Graph::empty(n)?;
    for (a, b) in g1.edges() {
        g.add_edge(a, b);
    }
    for (a, b) in g2.edges() {
        g.add_edge(map[a], map[b]);
    }
    Ok((g, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(k3.size(), 3);

        let trivial = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((trivial.order(), trivial.size()), (1, 0));

        let p4 = Graph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.size(), 3);
        assert_eq!(p4, Graph::path(4).unwrap());
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn named_graphs() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3, Graph::complete(3).unwrap());
        assert_eq!(Graph::star(3).unwrap().degrees(), vec![3, 1, 1, 1]);
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.edges(), vec![(0, 1)]);
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::star(0).is_err());
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn coalesce_examples() {
        let (paw, map) = coalesce(
            &Graph::complete(3).unwrap(),
            0,
            &Graph::path(2).unwrap(),
            0,
        )
        .unwrap();
        assert_eq!(map, vec![0, 3]);
        assert_eq!(paw.order(), 4);
        assert_eq!(paw.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2)]);

        let g = Graph::cycle(5).unwrap();
        let (same, _) = coalesce(&g, 2, &Graph::empty(1).unwrap(), 0).unwrap();
        assert_eq!(same, g);

        let c3 = Graph::cycle(3).unwrap();
        let s2 = Graph::star(2).unwrap();
        let (h, _) = coalesce(&c3, 0, &s2, 0).unwrap();
        assert_eq!(h.order(), 3 + 3 - 1);
        assert_eq!(h.size(), 5);
        assert_eq!(h.degree(0), c3.degree(0) + s2.degree(0));
    }

    #[test]
    fn coalesce_maps_interior_root() {
        let (g, map) = coalesce(&Graph::path(2).unwrap(), 1, &Graph::path(3).unwrap(), 1).unwrap();
        assert_eq!(map, vec![2, 1, 3]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 3)]);
        assert!(coalesce(&g, 9, &g, 0).is_err());
    }

    #[test]
    fn upper_mask_order_matches_graph6_columns() {
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        let g = Graph::from_upper_mask(3, 0b100).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn permuted_and_edge_edits() {
        let p3 = Graph::path(3).unwrap();
        let q = p3.permuted(&[1, 0, 2]).unwrap();
        assert_eq!(q.edges(), vec![(0, 1), (0, 2)]);
        assert!(p3.permuted(&[0, 0, 1]).is_err());
        let c = p3.with_edge(0, 2).unwrap();
        assert_eq!(c, Graph::cycle(3).unwrap());
        assert_eq!(c.without_edge(0, 2).unwrap(), p3);
        assert_eq!(c.pendant_vertices(), Vec::<usize>::new());
        assert_eq!(p3.pendant_vertices(), vec![0, 2]);
    }
}
