//! Canonical labelling by individualization and refinement.
//!
//! The search tree is explored in full (no automorphism pruning). Graphs in
//! this crate have at most a few dozen vertices, so the tree stays small and
//! the leaves attaining the minimum are in bijection with automorphisms.

use super::LinkGraph;

/// A canonically relabelled graph and the map that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: LinkGraph,
    /// `relabel[v]` is the canonical index of original vertex `v`.
    pub relabel: Vec<usize>,
}

struct Search<'a> {
    g: &'a LinkGraph,
    best: Option<Vec<(usize, usize)>>,
    best_perm: Vec<usize>,
    /// Leaves whose relabelled edge list equals the current best.
    ties: Vec<Vec<usize>>,
    collect_ties: bool,
}

/// Equitable refinement: split cells by the multiset of neighbour colours
/// until stable. Colours are dense ranks and existing cell order is kept.
fn refine(g: &LinkGraph, colors: &mut [usize]) {
    let n = colors.len();
    let mut cells = count_cells(colors);
    loop {
        let mut sig: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                rank += 1;
            }
            colors[sig[i].2] = rank;
        }
        let now = rank + 1;
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn relabelled_edges(g: &LinkGraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

impl Search<'_> {
    fn visit(&mut self, colors: Vec<usize>) {
        let n = colors.len();
        // Target cell: the smallest colour shared by more than one vertex.
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
            self.leaf(colors);
            return;
        };
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let mut child = colors.clone();
            for (u, c) in child.iter_mut().enumerate() {
                if *c > target || (*c == target && u != v) {
                    *c += 1;
                }
            }
            refine(self.g, &mut child);
            self.visit(child);
        }
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let edges = relabelled_edges(self.g, &perm);
        match &self.best {
            Some(b) if edges > *b => {}
            Some(b) if edges == *b => {
                if self.collect_ties {
                    self.ties.push(perm);
                }
            }
            _ => {
                self.best = Some(edges);
                self.best_perm = perm.clone();
                self.ties.clear();
                if self.collect_ties {
                    self.ties.push(perm);
                }
            }
        }
    }
}

fn run(g: &LinkGraph, collect_ties: bool) -> Search<'_> {
    let mut search = Search {
        g,
        best: None,
        best_perm: Vec::new(),
        ties: Vec::new(),
        collect_ties,
    };
    let mut colors = vec![0; g.n()];
    if g.n() > 0 {
        refine(g, &mut colors);
    }
    search.visit(colors);
    search
}

/// Canonical form of the unlabelled graph. Vertex labels, if any, are dropped
/// from the canonical graph but the relabelling map is returned.
pub fn canonical_form(g: &LinkGraph) -> CanonicalForm {
    let bare = g.without_labels();
    let search = run(&bare, false);
    let relabel = search.best_perm;
    CanonicalForm {
        graph: bare.relabel(&relabel),
        relabel,
    }
}

pub fn isomorphic(a: &LinkGraph, b: &LinkGraph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a).graph == canonical_form(b).graph
}

/// All automorphisms as vertex permutations, identity first.
pub fn automorphisms(g: &LinkGraph) -> Vec<Vec<usize>> {
    let bare = g.without_labels();
    let search = run(&bare, true);
    let n = g.n();
    let mut inv_best = vec![0; n];
    for (v, &c) in search.best_perm.iter().enumerate() {
        inv_best[c] = v;
    }
    let mut out: Vec<Vec<usize>> = search
        .ties
        .iter()
        .map(|leaf| (0..n).map(|v| inv_best[leaf[v]]).collect())
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkgraph::named;

    #[test]
    fn permuted_copy_has_same_canonical_form() {
        let g = named::heawood();
        let perm: Vec<usize> = (0..g.n()).map(|v| (v * 5 + 3) % g.n()).collect();
        let h = g.relabel(&perm);
        assert_eq!(canonical_form(&g).graph, canonical_form(&h).graph);
    }

    #[test]
    fn relabel_map_is_an_isomorphism() {
        let g = named::generalized_petersen(8, 3);
        let cf = canonical_form(&g);
        for (u, v) in g.edges() {
            assert!(cf.graph.has_edge(cf.relabel[u], cf.relabel[v]));
        }
    }

    #[test]
    fn automorphisms_preserve_edges() {
        let g = named::complete_bipartite(3, 3);
        let auts = automorphisms(&g);
        assert_eq!(auts.len(), 72);
        assert_eq!(auts[0], (0..6).collect::<Vec<_>>());
        for a in &auts {
            for (u, v) in g.edges() {
                assert!(g.has_edge(a[u], a[v]));
            }
        }
    }

    #[test]
    fn path_and_star_differ() {
        let path = LinkGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let other = LinkGraph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let tri = LinkGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(isomorphic(&path, &other));
        assert!(!isomorphic(&path, &tri));
    }
}
