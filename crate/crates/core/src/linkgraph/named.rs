//! Small named graphs used as references and test oracles.

use super::LinkGraph;

/// Generalized Petersen graph GP(n, k): outer cycle `0..n`, spokes to `n..2n`,
/// inner vertices joined with step `k`.
pub fn generalized_petersen(n: usize, k: usize) -> LinkGraph {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    // GP(2k, k) lists each inner edge twice.
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    LinkGraph::from_edges(2 * n, &edges).expect("generalized Petersen graph is simple")
}

/// The 16-vertex ample graph, as GP(8, 3).
pub fn l74() -> LinkGraph {
    generalized_petersen(8, 3)
}

/// The same graph from its bipartite factor: `x_i ~ y_j` iff `j - i` is 0, 2
/// or 7 mod 8, i.e. the biadjacency matrix is `Id + σ² + σ⁷`.
pub fn l74_from_factor() -> LinkGraph {
    let mut edges = Vec::new();
    for i in 0..8 {
        for s in [0, 2, 7] {
            edges.push((i, 8 + (i + s) % 8));
        }
    }
    LinkGraph::from_edges(16, &edges).expect("factor graph is simple")
}

/// Incidence graph of the Fano plane: points `0..7`, lines `7 + i` through
/// `{i, i+1, i+3}` mod 7.
pub fn heawood() -> LinkGraph {
    let mut edges = Vec::new();
    for i in 0..7 {
        for s in [0, 1, 3] {
            edges.push(((i + s) % 7, 7 + i));
        }
    }
    LinkGraph::from_edges(14, &edges).expect("Fano incidence graph is simple")
}

pub fn complete(n: usize) -> LinkGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    LinkGraph::from_edges(n, &edges).expect("complete graph is simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> LinkGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    LinkGraph::from_edges(a + b, &edges).expect("complete bipartite graph is simple")
}

pub fn cycle(n: usize) -> LinkGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    LinkGraph::from_edges(n, &edges).expect("cycle of length >= 3 is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((l74().n(), l74().edge_count()), (16, 24));
        assert_eq!((heawood().n(), heawood().edge_count()), (14, 21));
        assert_eq!(l74_from_factor().edge_count(), 24);
        assert_eq!(generalized_petersen(5, 2).edge_count(), 15);
        assert_eq!(l74().regular_degree(), Some(3));
    }
}
