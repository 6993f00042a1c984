//! Eigenvector structure on `U(n, k, g)` and on pendant trees.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph, UnicyclicLayout};
use crate::spectral::{q_min, SpectralResult};
use crate::tol;

use super::report::{VerificationReport, Witness};

fn gap_guard(report: &mut VerificationReport, g: &Graph, x: &SpectralResult) -> bool {
    if x.is_simple() {
        return true;
    }
    report.indeterminate(
        format!("spectral gap {:e} below guard {:e}", x.gap, tol::GAP_GUARD),
        Witness::new("gap", g, vec![x.qmin, x.gap]),
    );
    false
}

/// Sign pattern of the first Q-eigenvector of `U(n, k, g)`:
///
/// 1. `x(v_i) = x(v_{g-i})` for `i = 1..(g-1)/2`;
/// 2. `x(v_{(g-1)/2}) x(v_{(g+1)/2}) > 0` and `x(v) x(w) < 0` on every other edge;
/// 3. `|x(v_g)| > |x(v_1)| > ... > |x(v_{(g-1)/2})| > 0`.
pub fn check_sign_structure(n: usize, k: usize, g: usize) -> Result<VerificationReport> {
    let lay = UnicyclicLayout::new(n, k, g)?;
    let report = check_sign_structure_labeled(&lay.graph(), &lay.cycle)?;
    Ok(report.param("n", n).param("k", k).param("g", g))
}

/// The same pattern for an arbitrary graph and a claimed odd cycle
/// `v_1, ..., v_g` given in cyclic order.
pub fn check_sign_structure_labeled(gr: &Graph, cycle: &[usize]) -> Result<VerificationReport> {
    let g = cycle.len();
    if g < 3 || g.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("cycle must have odd length >= 3, got {g}")));
    }
    for &v in cycle {
        gr.check_vertex(v)?;
    }
    let mut report =
        VerificationReport::new("lemma-sign", tol::SIGN_PRODUCT).param("graph6", gr.to_string());
    let x = q_min(gr)?;
    if !gap_guard(&mut report, gr, &x) {
        return Ok(report);
    }
    let xs = &x.vector;
    let v = |i: usize| cycle[i - 1];
    let h = (g - 1) / 2;

    for i in 1..=h {
        let (a, b) = (v(i), v(g - i));
        let diff = (xs[a] - xs[b]).abs();
        if diff > tol::SIGN_SYMMETRY {
            report.fail(Witness::new(
                format!("symmetry v{i}={a} vs v{}={b}", g - i),
                gr,
                vec![xs[a], xs[b]],
            ));
        }
    }

    let special = (v(h).min(v(h + 1)), v(h).max(v(h + 1)));
    if !gr.has_edge(special.0, special.1) {
        return Err(Error::InvalidParams("consecutive cycle vertices are not adjacent".into()));
    }
    for (a, b) in gr.edges() {
        let p = xs[a] * xs[b];
        let slack = if (a, b) == special { p } else { -p };
        report.observe_with(slack, tol::SIGN_PRODUCT, || {
            Witness::new(format!("edge {a}-{b}"), gr, vec![xs[a], xs[b]])
        });
    }

    let mut chain: Vec<usize> = vec![v(g)];
    chain.extend((1..=h).map(v));
    for w in chain.windows(2) {
        let step = xs[w[0]].abs() - xs[w[1]].abs();
        report.observe_with(step, tol::STRICT_CHAIN, || {
            Witness::new(format!("chain {}>{}", w[0], w[1]), gr, vec![xs[w[0]], xs[w[1]]])
        });
    }
    let last = xs[v(h)].abs();
    report.observe_with(last, tol::SIGN_PRODUCT, || {
        Witness::new(format!("chain end {}", v(h)), gr, vec![xs[v(h)]])
    });
    Ok(report)
}

/// A maximal pendant tree: `root` lies on the 2-core, `parent[i]` is the
/// parent of `vertices[i]` on the way back to the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeBranch {
    pub root: usize,
    pub vertices: Vec<usize>,
    pub parent: Vec<usize>,
}

/// Vertices that survive repeated deletion of vertices of degree at most one.
pub fn two_core(g: &Graph) -> u64 {
    let mut alive = g.vertex_mask();
    loop {
        let peel = bits(alive)
            .filter(|&v| (g.neighbor_mask(v) & alive).count_ones() <= 1)
            .fold(0u64, |m, v| m | bit(v));
        if peel == 0 {
            return alive;
        }
        alive &= !peel;
    }
}

/// Maximal tree branches hanging off the 2-core, in BFS order from each root.
pub fn tree_branches(g: &Graph) -> Vec<TreeBranch> {
    let core = two_core(g);
    let mut out = Vec::new();
    for root in bits(core) {
        let hanging = g.neighbor_mask(root) & !core;
        if hanging == 0 {
            continue;
        }
        let mut vertices = Vec::new();
        let mut parent = Vec::new();
        let mut queue: std::collections::VecDeque<(usize, usize)> =
            bits(hanging).map(|c| (c, root)).collect();
        while let Some((v, p)) = queue.pop_front() {
            vertices.push(v);
            parent.push(p);
            for c in bits(g.neighbor_mask(v) & !core & !bit(p)) {
                queue.push_back((c, v));
            }
        }
        out.push(TreeBranch {
            root,
            vertices,
            parent,
        });
    }
    out
}

/// Along every nonzero pendant tree, `|x|` strictly increases away from the root.
///
/// A branch counts as nonzero when one of its vertices (root included)
/// has `|x(v)| > 1e-8`.
pub fn check_tree_branch_monotone(g: &Graph) -> Result<VerificationReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    let mut report =
        VerificationReport::new("lemma-value", tol::STRICT_CHAIN).param("graph6", g.to_string());
    report.note("nonzero branch read as: some branch vertex has |x(v)| > 1e-8");
    let branches = tree_branches(g);
    if branches.is_empty() {
        report.note("no pendant trees");
        return Ok(report);
    }
    let x = q_min(g)?;
    if !gap_guard(&mut report, g, &x) {
        return Ok(report);
    }
    let a = x.abs_vector();
    for br in branches {
        let peak = br.vertices.iter().map(|&v| a[v]).fold(a[br.root], f64::max);
        if peak <= tol::NONZERO_ENTRY {
            report.note(format!("branch at {} is zero, skipped", br.root));
            continue;
        }
        for (&v, &p) in br.vertices.iter().zip(&br.parent) {
            report.observe(a[v] - a[p], || {
                Witness::new(format!("edge {p}->{v}"), g, vec![a[p], a[v]])
            });
        }
    }
    Ok(report)
}
