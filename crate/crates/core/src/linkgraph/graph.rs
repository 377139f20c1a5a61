use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// Which end of a loop of the base bouquet a link vertex sits on.
///
/// `Flat` is the germ where the loop leaves the base point, `Sharp` the germ
/// where it comes back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum End {
    Flat,
    Sharp,
}

impl End {
    pub fn symbol(self) -> char {
        match self {
            End::Flat => '♭',
            End::Sharp => '♯',
        }
    }

    pub fn flip(self) -> End {
        match self {
            End::Flat => End::Sharp,
            End::Sharp => End::Flat,
        }
    }
}

/// Name of a link vertex: a letter `1..=8` and an end marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub letter: u8,
    pub end: End,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.end.symbol())
    }
}

impl FromStr for VertexLabel {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GraphError::Parse(format!("bad vertex label `{s}`"));
        let (digits, end) = if let Some(d) = s.strip_suffix('♭').or_else(|| s.strip_suffix('b')) {
            (d, End::Flat)
        } else if let Some(d) = s.strip_suffix('♯').or_else(|| s.strip_suffix('#')) {
            (d, End::Sharp)
        } else {
            return Err(bad());
        };
        let letter: u8 = digits.parse().map_err(|_| bad())?;
        if letter == 0 {
            return Err(bad());
        }
        Ok(VertexLabel { letter, end })
    }
}

/// Shortest cycle length of a graph; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Finite simple undirected graph, optionally with `i♭`/`i♯` vertex names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<VertexLabel>>,
}

impl LinkGraph {
    pub fn empty(n: usize) -> Self {
        LinkGraph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u.max(v), n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::MultiEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(LinkGraph { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::Parse(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(*l) {
                return Err(GraphError::DuplicateLabel(l.to_string()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<VertexLabel> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn vertex_by_label(&self, label: VertexLabel) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|&l| l == label)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.distances_from(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Two-colouring of a connected bipartite graph, `None` otherwise.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n()];
        for start in 0..self.n() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Applies `perm` (old vertex -> new vertex); labels travel with vertices.
    pub fn relabel(&self, perm: &[usize]) -> LinkGraph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&w| perm[w]).collect();
            adj[perm[u]].sort_unstable();
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = ls.clone();
            for (u, &l) in ls.iter().enumerate() {
                out[perm[u]] = l;
            }
            out
        });
        LinkGraph { adj, labels }
    }

    pub fn without_labels(&self) -> LinkGraph {
        LinkGraph {
            adj: self.adj.clone(),
            labels: None,
        }
    }

    /// Adjacency-list text: one line `v: u1 u2 u3` (or `v(3♭): ...`) per vertex.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for (v, list) in self.adj.iter().enumerate() {
            match self.label(v) {
                Some(l) => out.push_str(&format!("{v}({l}):")),
                None => out.push_str(&format!("{v}:")),
            }
            for w in list {
                out.push_str(&format!(" {w}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_adjacency_text(text: &str) -> Result<LinkGraph, GraphError> {
        let mut rows: Vec<(usize, Option<VertexLabel>, Vec<usize>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('%') || line.starts_with("//") {
                continue;
            }
            let err = |msg: &str| GraphError::Parse(format!("line {}: {msg}", lineno + 1));
            let (head, tail) = line.split_once(':').ok_or_else(|| err("missing `:`"))?;
            let head = head.trim();
            let (vtext, label) = match head.split_once('(') {
                Some((v, rest)) => {
                    let inner = rest.strip_suffix(')').ok_or_else(|| err("unclosed label"))?;
                    (v.trim(), Some(inner.parse::<VertexLabel>()?))
                }
                None => (head, None),
            };
            let v: usize = vtext.parse().map_err(|_| err("bad vertex id"))?;
            let nbrs = tail
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err("bad neighbour id")))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push((v, label, nbrs));
        }
        let n = rows.len();
        let mut seen_row = vec![false; n];
        let mut edges = BTreeSet::new();
        let mut labels: Vec<Option<VertexLabel>> = vec![None; n];
        for (v, label, nbrs) in &rows {
            if *v >= n {
                return Err(GraphError::VertexOutOfRange(*v, n));
            }
            if std::mem::replace(&mut seen_row[*v], true) {
                return Err(GraphError::Parse(format!("vertex {v} listed twice")));
            }
            labels[*v] = *label;
            for &w in nbrs {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange(w, n));
                }
                if w == *v {
                    return Err(GraphError::SelfLoop(w));
                }
                edges.insert((w.min(*v), w.max(*v)));
            }
        }
        // Every listed adjacency must be listed symmetrically.
        for (v, _, nbrs) in &rows {
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                return Err(GraphError::MultiEdge(*v, sorted[0]));
            }
            for &w in nbrs {
                let back = rows.iter().find(|r| r.0 == w).map(|r| r.2.contains(v));
                if back != Some(true) {
                    return Err(GraphError::Parse(format!("edge {v}-{w} is not symmetric")));
                }
            }
        }
        let edges: Vec<_> = edges.into_iter().collect();
        let g = LinkGraph::from_edges(n, &edges)?;
        if labels.iter().all(Option::is_some) && n > 0 {
            g.with_labels(labels.into_iter().map(Option::unwrap).collect())
        } else if labels.iter().any(Option::is_some) {
            Err(GraphError::Parse("labels must be given for all vertices or none".into()))
        } else {
            Ok(g)
        }
    }

    /// Length of the shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Connected, trivalent, and shortest cycle of length exactly 6.
    pub fn is_ample(&self) -> bool {
        self.n() > 0
            && self.regular_degree() == Some(3)
            && self.is_connected()
            && self.girth() == Girth::Finite(6)
    }
}
