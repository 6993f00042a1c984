//! Spanning unicyclic subgraphs that keep an odd cycle and the domination number.

use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, is_cycle_in, Graph};

use super::report::{VerificationReport, Witness};

/// Which route produced the subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractionCase {
    /// Some vertex dominates everything.
    SingleDominator,
    /// The dominating-set / complement bipartite subgraph is connected.
    ConnectedCut,
    /// It is not; components are joined and extra cycles broken.
    DisconnectedCut,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub graph: Graph,
    pub case: ExtractionCase,
    /// Minimum dominating set used throughout.
    pub dominating_set: Vec<usize>,
}

/// A spanning unicyclic subgraph of `g` whose cycle is odd and whose
/// domination number equals that of `g`.
pub fn extract_spanning_unicyclic(g: &Graph) -> Result<Graph> {
    Ok(extract_with_trace(g)?.graph)
}

fn invariant(ok: bool, step: &'static str, h: &Graph) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ExtractionInvariant {
            step,
            graph6: h.to_string(),
        })
    }
}

/// Tree of the `U`-`W` edges in which every `w` keeps one edge to the first
/// dominator that reaches it, and each later dominator keeps a single
/// connector into what is already covered. Works component by component;
/// returns the forest and its domination-carrying (protected) edges.
fn prune_cut(g: &Graph, dom: u64) -> (Graph, Vec<(usize, usize)>) {
    let n = g.order();
    let rest = g.vertex_mask() & !dom;
    let mut forest = Graph::empty(n).expect("same order");
    let mut protected = Vec::new();
    let mut pending = dom;
    while pending != 0 {
        // seed a new component at the lowest unprocessed dominator
        let first = pending.trailing_zeros() as usize;
        pending &= !bit(first);
        let mut covered = g.neighbor_mask(first) & rest;
        for w in bits(covered) {
            forest.add_edge(first, w);
            protected.push((first.min(w), first.max(w)));
        }
        loop {
            let next = bits(pending).find(|&u| g.neighbor_mask(u) & covered != 0);
            let Some(u) = next else { break };
            pending &= !bit(u);
            let nb = g.neighbor_mask(u) & rest;
            let connector = (nb & covered).trailing_zeros() as usize;
            forest.add_edge(u, connector);
            for w in bits(nb & !covered) {
                forest.add_edge(u, w);
                protected.push((u.min(w), u.max(w)));
            }
            covered |= nb;
        }
    }
    (forest, protected)
}

fn is_intra(dom: u64, (a, b): (usize, usize)) -> bool {
    (dom >> a & 1) == (dom >> b & 1)
}

pub fn extract_with_trace(g: &Graph) -> Result<Extraction> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    let cert = domination_number(g);
    let dom = cert.witness.iter().fold(0u64, |m, &v| m | bit(v));
    let edges = g.edges();
    let cut_edges: Vec<_> = edges.iter().copied().filter(|&e| !is_intra(dom, e)).collect();
    let cut = Graph::from_edges(g.order(), &cut_edges)?;

    let (h, case) = if cert.gamma == 1 || cut.is_connected() {
        let (tree, _) = prune_cut(g, dom);
        invariant(tree.is_connected() && tree.size() + 1 == g.order(), "prune to tree", &tree)?;
        let e = edges
            .iter()
            .copied()
            .find(|&e| is_intra(dom, e))
            .expect("non-bipartite graph has an edge inside a side");
        let case = if cert.gamma == 1 {
            ExtractionCase::SingleDominator
        } else {
            ExtractionCase::ConnectedCut
        };
        (tree.with_edge(e.0, e.1)?, case)
    } else {
        (disconnected_cut(g, dom, &edges)?, ExtractionCase::DisconnectedCut)
    };

    invariant(h.is_unicyclic(), "unicyclic", &h)?;
    invariant(!h.is_bipartite(), "odd cycle", &h)?;
    invariant(edges_subset(&h, g), "subgraph", &h)?;
    invariant(domination_number(&h).gamma == cert.gamma, "domination preserved", &h)?;
    Ok(Extraction {
        graph: h,
        case,
        dominating_set: cert.witness,
    })
}

/// Report form of the extraction: spanning, connected, `|E| = n`, a single
/// odd cycle and unchanged domination number, each checked independently of
/// the extraction code.
pub fn check_unispan(g: &Graph) -> Result<VerificationReport> {
    let gamma = domination_number(g).gamma;
    let mut r = VerificationReport::new("lemma-unispan", 0.0)
        .param("graph6", g.to_string())
        .param("gamma", gamma);
    match extract_with_trace(g) {
        Ok(t) => {
            let h = &t.graph;
            let cycle = h.shortest_odd_cycle();
            let checks = [
                ("order", h.order() == g.order()),
                ("subgraph", edges_subset(h, g)),
                ("connected", h.is_connected()),
                ("edge count", h.size() == h.order()),
                ("odd cycle", cycle.as_ref().is_some_and(|c| is_cycle_in(h, c))),
                ("domination", domination_number(h).gamma == gamma),
            ];
            for (name, ok) in checks {
                r.observe(if ok { 0.0 } else { -1.0 }, || Witness::new(name, h, vec![]));
            }
            r.note(format!("case {:?}; output {h}", t.case));
        }
        Err(Error::ExtractionInvariant { step, graph6 }) => {
            r.margin = -1.0;
            r.fail(Witness {
                label: format!("invariant '{step}'"),
                graph6,
                values: vec![],
            });
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

fn edges_subset(h: &Graph, g: &Graph) -> bool {
    (0..g.order()).all(|v| h.neighbor_mask(v) & !g.neighbor_mask(v) == 0)
}

fn disconnected_cut(g: &Graph, dom: u64, edges: &[(usize, usize)]) -> Result<Graph> {
    let (mut h, protected) = prune_cut(g, dom);
    // join the pruned components with edges across them (all inside a side)
    for &(a, b) in edges {
        if h.component_mask(a) & bit(b) == 0 {
            h.add_edge(a, b);
        }
    }
    invariant(h.is_connected() && h.size() + 1 == g.order(), "spanning tree", &h)?;

    // add the remaining edges in order until the first odd cycle shows up
    for &(a, b) in edges {
        if h.has_edge(a, b) {
            continue;
        }
        h.add_edge(a, b);
        if !h.is_bipartite() {
            break;
        }
    }
    invariant(!h.is_bipartite(), "first odd cycle", &h)?;

    // break surplus cycles, keeping connectivity, an odd cycle and every
    // domination-carrying edge; edges inside a side go first
    while h.size() > h.order() {
        let removable = |e: (usize, usize)| {
            if protected.contains(&e) {
                return false;
            }
            let cut = h.without_edge(e.0, e.1).expect("valid edge");
            cut.is_connected() && !cut.is_bipartite()
        };
        let current = h.edges();
        let pick = current
            .iter()
            .copied()
            .filter(|&e| is_intra(dom, e))
            .find(|&e| removable(e))
            .or_else(|| current.iter().copied().find(|&e| removable(e)));
        let Some((a, b)) = pick else {
            return Err(Error::ExtractionInvariant {
                step: "break even cycle",
                graph6: h.to_string(),
            });
        };
        h.remove_edge(a, b);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn unicyclic_input_is_returned() {
        assert_eq!(extract_spanning_unicyclic(&paw()).unwrap(), paw());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(extract_spanning_unicyclic(&c5).unwrap(), c5);
    }

    #[test]
    fn k4() {
        let k4 = Graph::complete(4).unwrap();
        let t = extract_with_trace(&k4).unwrap();
        assert_eq!(t.case, ExtractionCase::SingleDominator);
        assert_eq!((t.graph.order(), t.graph.size()), (4, 4));
        assert_eq!(t.graph.odd_girth(), Some(3));
        assert_eq!(domination_number(&t.graph).gamma, 1);
    }

    #[test]
    fn disconnected_cut_case() {
        // Two triangles joined by the edge 2-3; dominating set {0, 3}
        // leaves the cut graph split.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        let t = extract_with_trace(&g).unwrap();
        assert_eq!(t.graph.size(), 6);
        assert!(!t.graph.is_bipartite());
        assert_eq!(domination_number(&t.graph).gamma, 2);
    }

    #[test]
    fn connected_cut_case() {
        // C_5 with a chord and pendant paths: gamma >= 2
        let g = Graph::from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 5), (5, 6), (4, 7), (7, 8)],
        )
        .unwrap();
        let t = extract_with_trace(&g).unwrap();
        assert!(t.graph.is_unicyclic());
        assert_eq!(domination_number(&t.graph).gamma, domination_number(&g).gamma);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(extract_spanning_unicyclic(&Graph::cycle(6).unwrap()), Err(Error::Bipartite));
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(extract_spanning_unicyclic(&g), Err(Error::Disconnected));
    }

    #[test]
    fn exhaustive_small_graphs() {
        for n in 3..=6 {
            let pairs = n * (n - 1) / 2;
            for mask in 0..1u64 << pairs {
                let g = Graph::from_upper_mask(n, mask).unwrap();
                if !g.is_connected() || g.is_bipartite() {
                    continue;
                }
                let h = extract_spanning_unicyclic(&g).unwrap();
                assert!(h.is_unicyclic() && !h.is_bipartite());
            }
        }
    }
}
