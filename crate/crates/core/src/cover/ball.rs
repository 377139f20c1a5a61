//! Finite balls of the universal cover.

use serde::Serialize;

use crate::complexes::{arrival_germ, departure_germ, link_of, Face, Presentation, LINK_VERTICES};
use crate::linkgraph::LinkGraph;

use super::develop::{Developer, NONE};
use super::local::LocalLink;
use super::CoverError;

/// A directed edge `source --letter--> target`, letter in `1..=8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub letter: u8,
}

/// A triangle `p -z-> q -y-> r -x-> p` realizing face `[x, y, z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle {
    pub face: usize,
    pub vertices: [usize; 3],
    /// Edge ids of the sides `p q`, `q r`, `r p`.
    pub sides: [usize; 3],
}

/// Start vertex and signed letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub start: usize,
    pub letters: Vec<i8>,
}

/// Full subcomplex of the cover on the vertices within simplicial distance
/// `radius` of the base, numbered breadth-first with germs in index order.
#[derive(Clone, Debug)]
pub struct CoverBall {
    faces: Vec<Face>,
    link: LocalLink,
    radius: usize,
    dist: Vec<usize>,
    nbr: Vec<[u32; LINK_VERTICES]>,
    edges: Vec<Edge>,
    out_edge: Vec<[u32; 8]>,
    triangles: Vec<Triangle>,
    edge_triangles: Vec<Vec<usize>>,
    sphere_sizes: Vec<usize>,
}

/// Size summary, as reported by the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallStats {
    pub radius: usize,
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    pub sphere_sizes: Vec<usize>,
}

/// Develops the ball of radius `radius`. Every vertex at distance below
/// `radius` is completed; convexity of the developed region then makes the
/// edges and triangles among vertices of the ball exact.
pub fn develop_ball(p: &Presentation, radius: usize, budget: usize) -> Result<CoverBall, CoverError> {
    let mut dev = Developer::new(p, budget)?;
    loop {
        let todo: Vec<u32> = dev
            .bfs(radius)
            .into_iter()
            .filter(|&(_, d)| d < radius)
            .map(|(v, _)| v)
            .collect();
        let mut progressed = false;
        for v in todo {
            if !dev.is_complete(v) {
                dev.complete(v)?;
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    CoverBall::from_developer(&mut dev, radius)
}

impl CoverBall {
    /// Snapshot of the ball of radius `radius` around the base of `dev`.
    pub fn from_developer(dev: &mut Developer, radius: usize) -> Result<Self, CoverError> {
        let order = dev.bfs(radius);
        let index: std::collections::HashMap<u32, usize> =
            order.iter().enumerate().map(|(i, &(v, _))| (v, i)).collect();
        let n = order.len();
        let mut nbr = vec![[NONE; LINK_VERTICES]; n];
        for (i, &(v, _)) in order.iter().enumerate() {
            for (g, slot) in nbr[i].iter_mut().enumerate() {
                if let Some(&j) = dev.neighbor(v, g).and_then(|w| index.get(&w)) {
                    *slot = j as u32;
                }
            }
        }
        let mut edges = Vec::new();
        let mut out_edge = vec![[NONE; 8]; n];
        for (v, row) in nbr.iter().enumerate() {
            for letter in 1..=8u8 {
                let w = row[departure_germ(letter as i8)];
                if w != NONE {
                    out_edge[v][letter as usize - 1] = edges.len() as u32;
                    edges.push(Edge {
                        source: v,
                        target: w as usize,
                        letter,
                    });
                }
            }
        }
        let faces = dev.link().faces().to_vec();
        let side = |out_edge: &[[u32; 8]], u: usize, w: usize, s: i8| -> usize {
            let (src, l) = if s > 0 { (u, s) } else { (w, -s) };
            out_edge[src][l as usize - 1] as usize
        };
        let mut triangles = Vec::new();
        for (r, &(v, _)) in order.iter().enumerate() {
            let mask = dev.corner_mask(v);
            for (fi, f) in faces.iter().enumerate() {
                if mask & (1 << (3 * fi)) == 0 {
                    continue;
                }
                let p = nbr[r][departure_germ(f[0])];
                let q = nbr[r][arrival_germ(f[1])];
                if p == NONE || q == NONE {
                    continue;
                }
                let (p, q) = (p as usize, q as usize);
                triangles.push(Triangle {
                    face: fi,
                    vertices: [p, q, r],
                    sides: [
                        side(&out_edge, p, q, f[2]),
                        side(&out_edge, q, r, f[1]),
                        side(&out_edge, r, p, f[0]),
                    ],
                });
            }
        }
        triangles.sort_by_key(|t| (t.vertices[2], t.face));
        let mut edge_triangles = vec![Vec::new(); edges.len()];
        for (t, tri) in triangles.iter().enumerate() {
            for &e in &tri.sides {
                edge_triangles[e].push(t);
            }
        }
        let dist: Vec<usize> = order.iter().map(|&(_, d)| d).collect();
        let mut sphere_sizes = vec![0; radius + 1];
        for &d in &dist {
            sphere_sizes[d] += 1;
        }
        Ok(CoverBall {
            faces,
            link: dev.link().clone(),
            radius,
            dist,
            nbr,
            edges,
            out_edge,
            triangles,
            edge_triangles,
            sphere_sizes,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn base(&self) -> usize {
        0
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn local_link(&self) -> &LocalLink {
        &self.link
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn sphere_sizes(&self) -> &[usize] {
        &self.sphere_sizes
    }

    pub fn distance(&self, v: usize) -> usize {
        self.dist[v]
    }

    pub fn stats(&self) -> BallStats {
        BallStats {
            radius: self.radius,
            vertices: self.vertex_count(),
            edges: self.edges.len(),
            triangles: self.triangles.len(),
            sphere_sizes: self.sphere_sizes.clone(),
        }
    }

    /// Neighbour along germ `g`, if inside the ball.
    pub fn neighbor(&self, v: usize, g: usize) -> Option<usize> {
        let w = self.nbr[v][g];
        (w != NONE).then_some(w as usize)
    }

    /// Vertex one signed letter away.
    pub fn step(&self, v: usize, s: i8) -> Option<usize> {
        self.neighbor(v, departure_germ(s))
    }

    /// Edge `v --letter-->`, `letter` in `1..=8`.
    pub fn out_edge(&self, v: usize, letter: u8) -> Option<usize> {
        let e = self.out_edge[v][letter as usize - 1];
        (e != NONE).then_some(e as usize)
    }

    /// Triangles having edge `e` as a side.
    pub fn triangles_on_edge(&self, e: usize) -> &[usize] {
        &self.edge_triangles[e]
    }

    /// Whether every neighbour and triangle at `v` lies in the ball.
    pub fn has_complete_link(&self, v: usize) -> bool {
        self.dist[v] < self.radius
    }

    /// Endpoint of `word` read from `start`, or `None` once it leaves the ball.
    pub fn trace_from(&self, start: usize, word: &[i8]) -> Option<usize> {
        word.iter().try_fold(start, |v, &s| self.step(v, s))
    }

    pub fn trace(&self, word: &[i8]) -> Option<usize> {
        self.trace_from(0, word)
    }

    /// Vertices visited by a path, or an error if it leaves the ball.
    pub fn vertices_of(&self, path: &Path) -> Result<Vec<usize>, CoverError> {
        let mut out = vec![path.start];
        let mut v = path.start;
        for &s in &path.letters {
            super::check_letter(s)?;
            v = self.step(v, s).ok_or(CoverError::OutOfBall)?;
            out.push(v);
        }
        Ok(out)
    }

    /// Local geodesic test: consecutive letters meet at angle at least π.
    pub fn is_geodesic(&self, path: &Path) -> Result<bool, CoverError> {
        self.vertices_of(path)?;
        Ok(super::letters_are_geodesic(&self.link, &path.letters, false))
    }

    /// The labelled link at `v` as seen inside the ball.
    pub fn link_at(&self, v: usize) -> LinkGraph {
        let mut edges = Vec::new();
        for t in self.triangles_at(v) {
            let tri = &self.triangles[t];
            let slot = match tri.vertices.iter().position(|&x| x == v) {
                Some(0) => 2,
                Some(1) => 1,
                _ => 0,
            };
            edges.push(self.link.corner_germs(3 * tri.face + slot));
        }
        LinkGraph::from_edges(LINK_VERTICES, &edges)
            .expect("corners at a vertex are distinct")
            .with_labels((0..LINK_VERTICES).map(crate::complexes::germ_label).collect())
            .expect("germ labels are distinct")
    }

    /// Triangles with `v` as a vertex.
    pub fn triangles_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (1..=8u8)
            .flat_map(|l| {
                [self.out_edge(v, l), self.step(v, -(l as i8)).and_then(|u| self.out_edge(u, l))]
            })
            .flatten()
            .flat_map(|e| self.edge_triangles[e].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Checks the structural invariants; returns the first violation.
    pub fn check_invariants(&self, p: &Presentation) -> Result<(), String> {
        let link = link_of(p).map_err(|e| e.to_string())?;
        let want: std::collections::BTreeSet<(usize, usize)> = link.edges().into_iter().collect();
        for v in 0..self.vertex_count() {
            for g in 0..LINK_VERTICES {
                if let Some(w) = self.neighbor(v, g) {
                    if self.neighbor(w, g ^ 1) != Some(v) {
                        return Err(format!("germ {g} at {v} is not reciprocated"));
                    }
                }
            }
            if !self.has_complete_link(v) {
                continue;
            }
            if (0..LINK_VERTICES).any(|g| self.neighbor(v, g).is_none()) {
                return Err(format!("vertex {v} is missing a neighbour"));
            }
            let got: std::collections::BTreeSet<(usize, usize)> =
                self.link_at(v).edges().into_iter().collect();
            if got != want {
                return Err(format!("link at {v} differs from the vertex link"));
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            let interior = self.has_complete_link(edge.source) || self.has_complete_link(edge.target);
            if interior && self.edge_triangles[e].len() != 3 {
                return Err(format!("edge {e} bounds {} triangles", self.edge_triangles[e].len()));
            }
        }
        Ok(())
    }
}
