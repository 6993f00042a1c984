#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use specq_core::Graph;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn random_tree(rng: &mut TestRng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

/// Erdős–Rényi graph.
pub fn random_graph(rng: &mut TestRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random tree plus `extra` random chords.
pub fn random_connected(rng: &mut TestRng, n: usize, extra: usize) -> Graph {
    let mut g = random_tree(rng, n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g = g.with_edge(u, v).unwrap();
        }
    }
    g
}

/// Connected non-bipartite graph on `n >= 3` vertices.
pub fn random_connected_non_bipartite(rng: &mut TestRng, n: usize) -> Graph {
    loop {
        let extra = rng.gen_range(1..=n);
        let g = random_connected(rng, n, extra);
        if !g.is_bipartite() {
            return g;
        }
    }
}

/// Connected bipartite graph: a tree with chords between the two sides.
pub fn random_connected_bipartite(rng: &mut TestRng, n: usize) -> Graph {
    let mut g = random_tree(rng, n);
    let side = g.bipartition().unwrap().side;
    for _ in 0..rng.gen_range(0..=n) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if side[u] != side[v] {
            g = g.with_edge(u, v).unwrap();
        }
    }
    g
}

/// Non-bipartite core with random trees hanging off it.
pub fn random_with_pendant_trees(rng: &mut TestRng, n: usize) -> Graph {
    let core_n = rng.gen_range(3..=n.clamp(3, 7));
    let core = random_connected_non_bipartite(rng, core_n);
    let mut edges = core.edges();
    for v in core_n..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_unit_vector(rng: &mut TestRng, n: usize) -> Vec<f64> {
    loop {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return x.into_iter().map(|a| a / norm).collect();
        }
    }
}

pub fn shuffled(rng: &mut TestRng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permuted(&perm).unwrap()
}

/// AHU encoding of a tree rooted at `root`.
fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&w| w != parent)
        .map(|w| ahu(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical string of a free tree, rooted at its center(s).
pub fn tree_code(g: &Graph) -> String {
    let n = g.order();
    let mut deg = g.degrees();
    let mut alive: Vec<usize> = (0..n).collect();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
        for &l in &leaves {
            for w in g.neighbors(l) {
                deg[w] = deg[w].saturating_sub(1);
            }
        }
        alive.retain(|v| !leaves.contains(v));
    }
    alive.iter().map(|&c| ahu(g, c, usize::MAX)).min().unwrap()
}

/// All unlabeled trees on `n` vertices, by leaf addition with AHU dedup.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 1..n {
        let mut seen = std::collections::BTreeMap::new();
        for t in &level {
            for v in 0..m {
                let mut edges = t.edges();
                edges.push((v, m));
                let g = Graph::from_edges(m + 1, &edges).unwrap();
                seen.entry(tree_code(&g)).or_insert(g);
            }
        }
        level = seen.into_values().collect();
    }
    level
}
