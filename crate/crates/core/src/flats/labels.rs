//! Labelled flat regions, checked against the faces without a cover.
//!
//! Every vertex of the universal cover has the same labelled link, so a
//! region of the plane with signed letters on its edges develops into the
//! cover from any base vertex as soon as each triangle reads a face and the
//! germs at each vertex are distinct. For a convex region that development
//! is an isometric embedding.

use std::collections::{BTreeMap, HashMap};

use crate::complexes::{departure_germ, Presentation};

use super::model::{ModelTriangle, ModelVertex};

/// Closed boundary walks of the faces, in both directions.
#[derive(Clone, Debug)]
pub struct FaceWalks {
    third: HashMap<(i8, i8), i8>,
}

impl FaceWalks {
    pub fn new(p: &Presentation) -> Self {
        let mut third = HashMap::new();
        for f in p.faces() {
            let walk = [f[2], f[1], f[0]];
            let back = [-f[0], -f[1], -f[2]];
            for w in [walk, back] {
                for r in 0..3 {
                    third.insert((w[r], w[(r + 1) % 3]), w[(r + 2) % 3]);
                }
            }
        }
        FaceWalks { third }
    }

    /// The letter closing a triangle whose walk starts `s, t`.
    pub fn close(&self, s: i8, t: i8) -> Option<i8> {
        self.third.get(&(s, t)).copied()
    }

    pub fn is_face(&self, w: [i8; 3]) -> bool {
        self.close(w[0], w[1]) == Some(w[2])
    }
}

/// Signed letters on directed model edges, stored on the edge from the
/// smaller endpoint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labelling {
    edges: BTreeMap<(ModelVertex, ModelVertex), i8>,
}

impl Labelling {
    pub fn new() -> Self {
        Labelling::default()
    }

    /// Sets the letter read from `p` to `q`.
    pub fn set(&mut self, p: ModelVertex, q: ModelVertex, s: i8) {
        if p < q {
            self.edges.insert((p, q), s);
        } else {
            self.edges.insert((q, p), -s);
        }
    }

    /// Letter read from `p` to `q`.
    pub fn get(&self, p: ModelVertex, q: ModelVertex) -> Option<i8> {
        if p < q {
            self.edges.get(&(p, q)).copied()
        } else {
            self.edges.get(&(q, p)).map(|&s| -s)
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Walk around a triangle counterclockwise.
    pub fn walk(&self, t: &ModelTriangle) -> Option<[i8; 3]> {
        let [p, q, r] = t.vertices();
        Some([self.get(p, q)?, self.get(q, r)?, self.get(r, p)?])
    }

    /// Restriction to the edges of the given triangles.
    pub fn restrict(&self, tris: &[ModelTriangle]) -> Labelling {
        let mut out = Labelling::new();
        for t in tris {
            let [p, q, r] = t.vertices();
            for (a, b) in [(p, q), (q, r), (r, p)] {
                if let Some(s) = self.get(a, b) {
                    out.set(a, b, s);
                }
            }
        }
        out
    }

    /// Letters as a canonical list, for comparisons.
    pub fn entries(&self) -> Vec<((ModelVertex, ModelVertex), i8)> {
        self.edges.iter().map(|(&k, &v)| (k, v)).collect()
    }

    /// Image under a lattice isometry.
    pub fn mapped(&self, f: fn(ModelVertex) -> ModelVertex) -> Labelling {
        let mut out = Labelling::new();
        for (&(p, q), &s) in &self.edges {
            out.set(f(p), f(q), s);
        }
        out
    }

    /// Checks that every triangle reads a face and that the germs at each
    /// vertex are pairwise distinct. Returns the first offending triangle
    /// or vertex as text.
    pub fn check(&self, walks: &FaceWalks, tris: &[ModelTriangle]) -> Result<(), String> {
        for t in tris {
            let w = self.walk(t).ok_or_else(|| format!("triangle {t:?} is not fully labelled"))?;
            if !walks.is_face(w) {
                return Err(format!("triangle {t:?} reads {w:?}, not a face"));
            }
        }
        let mut germs: BTreeMap<ModelVertex, Vec<usize>> = BTreeMap::new();
        for (&(p, q), &s) in &self.edges {
            germs.entry(p).or_default().push(departure_germ(s));
            germs.entry(q).or_default().push(departure_germ(-s));
        }
        for (v, mut gs) in germs {
            let n = gs.len();
            gs.sort_unstable();
            gs.dedup();
            if gs.len() != n {
                return Err(format!("two edges at {v:?} leave along the same germ"));
            }
        }
        Ok(())
    }
}
