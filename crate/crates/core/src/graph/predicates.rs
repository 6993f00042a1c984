use std::collections::VecDeque;

use super::{bit, bits, Graph};

/// Proper 2-coloring witness. `side[v]` is `false` for one class, `true` for the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

impl Bipartition {
    /// Class sizes `(false side, true side)`.
    pub fn sizes(&self) -> (usize, usize) {
        let t = self.side.iter().filter(|&&s| s).count();
        (self.side.len() - t, t)
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.side.len() == g.order() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

struct Bfs {
    dist: Vec<usize>,
    parent: Vec<usize>,
}

fn bfs(g: &Graph, s: usize) -> Bfs {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Bfs { dist, parent }
}

impl Graph {
    /// Bitset of the component containing `v`.
    pub fn component_mask(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.neighbor_mask(u);
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == self.vertex_mask()
    }

    /// Connected components as bitsets, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_mask(rest.trailing_zeros() as usize);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// A proper 2-coloring, or `None` when the graph has an odd cycle.
    /// Each component's least vertex gets side `false`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: color.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A shortest odd cycle as a vertex sequence, or `None` when bipartite.
    pub fn shortest_odd_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, a, b)
        for s in 0..self.order() {
            let t = bfs(self, s);
            for (a, b) in self.edges() {
                let (da, db) = (t.dist[a], t.dist[b]);
                if da == usize::MAX || da != db {
                    continue;
                }
                let len = 2 * da + 1;
                if best.is_none_or(|(l, ..)| len < l) {
                    best = Some((len, s, a, b));
                }
            }
        }
        let (_, root, a, b) = best?;
        let t = bfs(self, root);
        let climb = |mut v: usize| {
            let mut p = vec![v];
            while v != root {
                v = t.parent[v];
                p.push(v);
            }
            p
        };
        // A shortest odd closed walk is a simple cycle, so both tree paths
        // meet only at the root.
        let mut cycle = climb(a);
        cycle.reverse();
        let mut down = climb(b);
        down.pop();
        cycle.extend(down);
        Some(cycle)
    }

    /// Length of a shortest odd cycle, `None` when bipartite.
    pub fn odd_girth(&self) -> Option<usize> {
        self.shortest_odd_cycle().map(|c| c.len())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.order() {
            let t = bfs(self, s);
            for (a, b) in self.edges() {
                if t.dist[a] == usize::MAX || t.parent[a] == b || t.parent[b] == a {
                    continue;
                }
                let len = t.dist[a] + t.dist[b] + 1;
                best = Some(best.map_or(len, |x| x.min(len)));
            }
        }
        best
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.order()
    }
}

/// Checks that `cycle` is a simple cycle of `g`.
pub fn is_cycle_in(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 {
        return false;
    }
    let mut seen = 0u64;
    for (i, &v) in cycle.iter().enumerate() {
        if v >= g.order() || seen & bit(v) != 0 || !g.has_edge(v, cycle[(i + 1) % len]) {
            return false;
        }
        seen |= bit(v);
    }
    true
}
