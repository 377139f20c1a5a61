//! Backtracking enumeration of flat labellings of a model region.
//!
//! The next triangle is always one with the most labelled sides, so forced
//! triangles are filled first and every later choice has at most three
//! candidate walks. Germ collisions are rejected as soon as an edge is
//! labelled.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::complexes::{departure_germ, Presentation};

use super::labels::Labelling;
use super::model::{ModelTriangle, ModelVertex};

/// Oriented face walks indexed by the letter at each position.
#[derive(Clone, Debug)]
struct WalkIndex {
    all: Vec<[i8; 3]>,
    by_slot: HashMap<(usize, i8), Vec<[i8; 3]>>,
}

impl WalkIndex {
    fn new(p: &Presentation) -> Self {
        let mut all = Vec::new();
        for f in p.faces() {
            for w in [[f[2], f[1], f[0]], [-f[0], -f[1], -f[2]]] {
                for r in 0..3 {
                    all.push([w[r], w[(r + 1) % 3], w[(r + 2) % 3]]);
                }
            }
        }
        all.sort_unstable();
        all.dedup();
        let mut by_slot: HashMap<(usize, i8), Vec<[i8; 3]>> = HashMap::new();
        for w in &all {
            for (i, &s) in w.iter().enumerate() {
                by_slot.entry((i, s)).or_default().push(*w);
            }
        }
        WalkIndex { all, by_slot }
    }
}

/// A finite region of the model plane with indexed vertices and edges.
#[derive(Clone, Debug)]
pub struct Region {
    vertices: Vec<ModelVertex>,
    index: BTreeMap<ModelVertex, usize>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    triangles: Vec<ModelTriangle>,
    /// Per triangle: (edge id, same direction as the stored edge).
    sides: Vec<[(usize, bool); 3]>,
}

impl Region {
    /// Region made of `tris`, which must be edge-connected.
    pub fn new(tris: &[ModelTriangle]) -> Region {
        let mut tris = tris.to_vec();
        tris.sort_unstable();
        tris.dedup();
        let mut index = BTreeMap::new();
        for t in &tris {
            for v in t.vertices() {
                index.entry(v).or_insert(0);
            }
        }
        let vertices: Vec<ModelVertex> = index.keys().copied().collect();
        for (i, v) in vertices.iter().enumerate() {
            index.insert(*v, i);
        }
        let mut edges = Vec::new();
        let mut edge_index = HashMap::new();
        let mut sides = Vec::new();
        for t in &tris {
            let vs = t.vertices().map(|v| index[&v]);
            let mut s = [(0, true); 3];
            for i in 0..3 {
                let (a, b) = (vs[i], vs[(i + 1) % 3]);
                let key = (a.min(b), a.max(b));
                let id = *edge_index.entry(key).or_insert_with(|| {
                    edges.push(key);
                    edges.len() - 1
                });
                s[i] = (id, a < b);
            }
            sides.push(s);
        }
        let mut region = Region {
            vertices,
            index,
            edges,
            edge_index,
            triangles: tris,
            sides,
        };
        region.order_breadth_first();
        region
    }

    /// Reorders triangles so that each shares a side with an earlier one,
    /// starting from the triangle nearest the origin.
    fn order_breadth_first(&mut self) {
        let n = self.triangles.len();
        if n == 0 {
            return;
        }
        let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len()];
        for (t, s) in self.sides.iter().enumerate() {
            for &(e, _) in s {
                on_edge[e].push(t);
            }
        }
        let seed = (0..n)
            .min_by_key(|&t| (super::model::dist2_to_triangle_x16((0, 0), &self.triangles[t]), t))
            .unwrap();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([seed]);
        seen[seed] = true;
        while let Some(t) = queue.pop_front() {
            order.push(t);
            for &(e, _) in &self.sides[t] {
                for &u in &on_edge[e] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        assert_eq!(order.len(), n, "region is not edge-connected");
        self.triangles = order.iter().map(|&t| self.triangles[t]).collect();
        self.sides = order.iter().map(|&t| self.sides[t]).collect();
    }

    pub fn triangles(&self) -> &[ModelTriangle] {
        &self.triangles
    }

    pub fn vertices(&self) -> &[ModelVertex] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: ModelVertex) -> bool {
        self.index.contains_key(&v)
    }

    /// Labels of `l` as a per-edge vector, 0 where `l` has none.
    pub fn labels_from(&self, l: &Labelling) -> Vec<i8> {
        self.edges
            .iter()
            .map(|&(a, b)| l.get(self.vertices[a], self.vertices[b]).unwrap_or(0))
            .collect()
    }

    /// The labelling given by a per-edge vector.
    pub fn labelling(&self, labels: &[i8]) -> Labelling {
        let mut out = Labelling::new();
        for (&(a, b), &s) in self.edges.iter().zip(labels) {
            if s != 0 {
                out.set(self.vertices[a], self.vertices[b], s);
            }
        }
        out
    }

    /// For each lattice isometry fixing the origin that maps the region to
    /// itself, the image of every edge and whether its direction is kept.
    pub fn symmetry_actions(&self) -> Vec<Vec<(usize, bool)>> {
        super::model::symmetries()
            .into_iter()
            .filter_map(|f| {
                self.edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (*self.index.get(&f(self.vertices[a]))?, *self.index.get(&f(self.vertices[b]))?);
                        Some((self.edge_index[&(x.min(y), x.max(y))], x < y))
                    })
                    .collect()
            })
            .collect()
    }

    /// Least image of per-edge labels under `actions`.
    pub fn canonical_labels(labels: &[i8], actions: &[Vec<(usize, bool)>]) -> Vec<i8> {
        let mut best: Option<Vec<i8>> = None;
        let mut key = vec![0i8; labels.len()];
        for act in actions {
            for (e, &(img, keep)) in act.iter().enumerate() {
                key[img] = if keep { labels[e] } else { -labels[e] };
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key.clone());
            }
        }
        best.unwrap_or_else(|| labels.to_vec())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_between(&self, p: ModelVertex, q: ModelVertex) -> Option<usize> {
        let (a, b) = (*self.index.get(&p)?, *self.index.get(&q)?);
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }
}

/// Enumerates flat labellings of regions for one presentation.
#[derive(Clone, Debug)]
pub struct FlatSearch {
    walks: WalkIndex,
}

struct State<'a> {
    region: &'a Region,
    labels: Vec<i8>,
    germs: Vec<u16>,
    placed: Vec<bool>,
}

impl State<'_> {
    fn set(&mut self, e: usize, s: i8) -> bool {
        let (a, b) = self.region.edges[e];
        let (ga, gb) = (1u16 << departure_germ(s), 1u16 << departure_germ(-s));
        if self.germs[a] & ga != 0 || self.germs[b] & gb != 0 {
            return false;
        }
        self.germs[a] |= ga;
        self.germs[b] |= gb;
        self.labels[e] = s;
        true
    }

    fn unset(&mut self, e: usize) {
        let s = self.labels[e];
        let (a, b) = self.region.edges[e];
        self.germs[a] &= !(1u16 << departure_germ(s));
        self.germs[b] &= !(1u16 << departure_germ(-s));
        self.labels[e] = 0;
    }
}

impl FlatSearch {
    pub fn new(p: &Presentation) -> Self {
        FlatSearch {
            walks: WalkIndex::new(p),
        }
    }

    /// Calls `visit` with the per-edge labels of every flat labelling of
    /// `region` agreeing with `fixed`, until it returns `false`. Returns
    /// `false` when stopped early and `None` if `fixed` itself is not
    /// locally injective.
    pub fn for_each(&self, region: &Region, fixed: &Labelling, visit: &mut dyn FnMut(&[i8]) -> bool) -> Option<bool> {
        let mut st = State {
            region,
            labels: vec![0; region.edges.len()],
            germs: vec![0; region.vertices.len()],
            placed: vec![false; region.triangles.len()],
        };
        for (e, s) in region.labels_from(fixed).into_iter().enumerate() {
            if s != 0 && !st.set(e, s) {
                return None;
            }
        }
        Some(self.recurse(&mut st, visit))
    }

    fn side_letter(st: &State, t: usize, i: usize) -> i8 {
        let (e, fwd) = st.region.sides[t][i];
        let s = st.labels[e];
        if fwd {
            s
        } else {
            -s
        }
    }

    /// The unplaced triangle with the most labelled sides, ties broken by
    /// breadth-first order.
    fn next_triangle(st: &State) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for t in 0..st.region.triangles.len() {
            if st.placed[t] {
                continue;
            }
            let known = (0..3).filter(|&i| Self::side_letter(st, t, i) != 0).count();
            if known == 3 {
                return Some(t);
            }
            if best.is_none_or(|(_, k)| known > k) {
                best = Some((t, known));
            }
        }
        best.map(|(t, _)| t)
    }

    fn recurse(&self, st: &mut State, visit: &mut dyn FnMut(&[i8]) -> bool) -> bool {
        let Some(t) = Self::next_triangle(st) else {
            return visit(&st.labels);
        };
        let sides = st.region.sides[t];
        let current = [0, 1, 2].map(|i| Self::side_letter(st, t, i));
        let candidates: &[[i8; 3]] = match (0..3).find(|&i| current[i] != 0) {
            Some(i) => self.walks.by_slot.get(&(i, current[i])).map_or(&[], |v| v.as_slice()),
            None => &self.walks.all,
        };
        st.placed[t] = true;
        let mut go_on = true;
        for w in candidates {
            if (0..3).any(|i| current[i] != 0 && current[i] != w[i]) {
                continue;
            }
            let mut placed = Vec::with_capacity(3);
            let mut ok = true;
            for i in 0..3 {
                if current[i] != 0 {
                    continue;
                }
                let (e, fwd) = sides[i];
                if st.set(e, if fwd { w[i] } else { -w[i] }) {
                    placed.push(e);
                } else {
                    ok = false;
                    break;
                }
            }
            if ok {
                go_on = self.recurse(st, visit);
            }
            for e in placed {
                st.unset(e);
            }
            if !go_on {
                break;
            }
        }
        st.placed[t] = false;
        go_on
    }

    /// All flat labellings of `region` extending `fixed`.
    pub fn all(&self, region: &Region, fixed: &Labelling) -> Vec<Labelling> {
        let mut out = Vec::new();
        self.for_each(region, fixed, &mut |l| {
            out.push(region.labelling(l));
            true
        });
        out
    }

    /// Number of flat labellings of `region` extending `fixed`.
    pub fn count(&self, region: &Region, fixed: &Labelling) -> u64 {
        let mut n = 0u64;
        self.for_each(region, fixed, &mut |_| {
            n += 1;
            true
        });
        n
    }

    /// Whether `fixed` extends to a flat labelling of `region`.
    pub fn extends(&self, region: &Region, fixed: &Labelling) -> bool {
        self.for_each(region, fixed, &mut |_| false) == Some(false)
    }
}
