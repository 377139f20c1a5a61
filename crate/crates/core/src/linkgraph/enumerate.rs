//! Exhaustive generation of connected cubic graphs of girth 6.
//!
//! Girth at least 6 forces the ball of radius 2 around any vertex to be a
//! tree on 10 vertices, so that tree is fixed up front. The remaining edges
//! are added to the lowest unsaturated vertex, in increasing order of the
//! partner, and only between vertices at distance at least 5, which keeps the
//! girth at least 6 throughout. Fresh vertices are introduced one at a time.
//! Isomorphs are removed by canonical form at the leaves.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use super::{canonical_form, Girth, GraphError, LinkGraph};

/// Largest order accepted by default; the search grows very fast beyond it.
pub const DEFAULT_MAX_VERTICES: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_vertices: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

#[derive(Clone)]
struct State {
    adj: Vec<Vec<usize>>,
    used: usize,
}

impl State {
    fn root(n: usize) -> State {
        let mut s = State {
            adj: vec![Vec::with_capacity(3); n],
            used: 10,
        };
        for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)] {
            s.add(a, b);
        }
        s
    }

    fn add(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn remove(&mut self, a: usize, b: usize) {
        self.adj[a].pop();
        self.adj[b].pop();
    }

    /// Whether `b` lies within distance 4 of `a`.
    fn near(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![u8::MAX; self.adj.len()];
        seen[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if seen[x] == 4 {
                continue;
            }
            for &y in &self.adj[x] {
                if seen[y] == u8::MAX {
                    if y == b {
                        return true;
                    }
                    seen[y] = seen[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn lowest_open(&self) -> Option<usize> {
        (0..self.used).find(|&v| self.adj[v].len() < 3)
    }

    /// Partners that may be joined to `u` next.
    fn candidates(&self, u: usize) -> Vec<usize> {
        let floor = self.adj[u].iter().copied().max().unwrap_or(0).max(u);
        let mut out: Vec<usize> = (floor + 1..self.used)
            .filter(|&w| self.adj[w].len() < 3 && !self.near(u, w))
            .collect();
        if self.used < self.adj.len() && self.used > floor {
            out.push(self.used);
        }
        out
    }

    fn to_graph(&self) -> LinkGraph {
        let mut edges = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &w in list {
                if u < w {
                    edges.push((u, w));
                }
            }
        }
        LinkGraph::from_edges(self.adj.len(), &edges).expect("search never repeats an edge")
    }
}

fn connect(state: &mut State, u: usize, w: usize) -> bool {
    let fresh = w == state.used;
    state.add(u, w);
    if fresh {
        state.used += 1;
    }
    fresh
}

fn disconnect(state: &mut State, u: usize, w: usize, fresh: bool) {
    state.remove(u, w);
    if fresh {
        state.used -= 1;
    }
}

fn search(state: &mut State, found: &mut BTreeSet<Vec<(usize, usize)>>) {
    let Some(u) = state.lowest_open() else {
        if state.used == state.adj.len() {
            let g = state.to_graph();
            if g.is_connected() && g.girth() == Girth::Finite(6) {
                found.insert(canonical_form(&g).graph.edges());
            }
        }
        return;
    };
    for w in state.candidates(u) {
        let fresh = connect(state, u, w);
        search(state, found);
        disconnect(state, u, w, fresh);
    }
}

/// Expands the search tree breadth-first until there are enough independent
/// subtrees to spread over worker threads.
fn split(root: State, target: usize) -> Vec<State> {
    let mut layer = vec![root];
    for _ in 0..6 {
        if layer.len() >= target {
            break;
        }
        let mut next = Vec::new();
        for s in layer {
            match s.lowest_open() {
                None => next.push(s),
                Some(u) => {
                    for w in s.candidates(u) {
                        let mut child = s.clone();
                        connect(&mut child, u, w);
                        next.push(child);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

/// All connected cubic graphs on `n` vertices with girth exactly 6, one per
/// isomorphism class, canonically labelled and sorted by edge list.
pub fn enumerate_ample_cubic(
    n: usize,
    opts: EnumerationOptions,
) -> Result<Vec<LinkGraph>, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::BadOrder(n));
    }
    if n > opts.max_vertices {
        return Err(GraphError::Budget(n, opts.max_vertices));
    }
    if n < 10 {
        return Ok(Vec::new());
    }
    let subtrees = split(State::root(n), 64);
    let found: BTreeSet<Vec<(usize, usize)>> = subtrees
        .into_par_iter()
        .map(|mut s| {
            let mut local = BTreeSet::new();
            search(&mut s, &mut local);
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found
        .into_iter()
        .map(|edges| LinkGraph::from_edges(n, &edges).expect("canonical edges are simple"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_or_tiny_orders_rejected() {
        let o = EnumerationOptions::default();
        assert_eq!(enumerate_ample_cubic(7, o), Err(GraphError::BadOrder(7)));
        assert_eq!(enumerate_ample_cubic(2, o), Err(GraphError::BadOrder(2)));
    }

    #[test]
    fn small_orders_are_empty() {
        for n in [4, 6, 8, 10, 12] {
            assert!(enumerate_ample_cubic(n, EnumerationOptions::default())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let o = EnumerationOptions { max_vertices: 16 };
        assert_eq!(enumerate_ample_cubic(18, o), Err(GraphError::Budget(18, 16)));
    }
}
