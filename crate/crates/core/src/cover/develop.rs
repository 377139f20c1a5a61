//! Incremental development with union-find identification.
//!
//! The developed region is kept locally convex: whenever two germs at a
//! vertex are at link distance 1 or 2, the link geodesic between them is
//! filled in. A connected locally convex subcomplex of a CAT(0) complex is
//! convex and maps injectively, so distinct roots are distinct vertices of
//! the cover at every point between operations.

use crate::complexes::{arrival_germ, departure_germ, Presentation, LINK_VERTICES};

use super::local::LocalLink;
use super::CoverError;

pub(crate) const NONE: u32 = u32::MAX;
const ALL_CORNERS: u32 = (1 << 24) - 1;

/// Lazily developed part of the universal cover.
#[derive(Clone, Debug)]
pub struct Developer {
    link: LocalLink,
    parent: Vec<u32>,
    slots: Vec<[u32; LINK_VERTICES]>,
    corners: Vec<u32>,
    complete: Vec<bool>,
    queued: Vec<bool>,
    work: Vec<u32>,
    budget: usize,
    merges: usize,
}

impl Developer {
    /// A single base vertex. `budget` caps the number of vertices ever
    /// created, merged ones included.
    pub fn new(p: &Presentation, budget: usize) -> Result<Self, CoverError> {
        let mut d = Developer {
            link: LocalLink::new(p)?,
            parent: Vec::new(),
            slots: Vec::new(),
            corners: Vec::new(),
            complete: Vec::new(),
            queued: Vec::new(),
            work: Vec::new(),
            budget,
            merges: 0,
        };
        d.fresh()?;
        Ok(d)
    }

    pub fn link(&self) -> &LocalLink {
        &self.link
    }

    pub fn base(&mut self) -> u32 {
        self.find(0)
    }

    /// Vertices created so far, merged ones included.
    pub fn created(&self) -> usize {
        self.parent.len()
    }

    pub fn merges(&self) -> usize {
        self.merges
    }

    pub fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let p = self.parent[v as usize];
            self.parent[v as usize] = self.parent[p as usize];
            v = p;
        }
        v
    }

    pub fn is_complete(&mut self, v: u32) -> bool {
        let v = self.find(v);
        self.complete[v as usize]
    }

    /// Current neighbour of `v` along germ `g`, without creating one.
    pub fn neighbor(&mut self, v: u32, g: usize) -> Option<u32> {
        let v = self.find(v);
        let w = self.slots[v as usize][g];
        (w != NONE).then(|| self.find(w))
    }

    /// Bitmask of the corners (`3 * face + slot`) present at `v`.
    pub fn corner_mask(&mut self, v: u32) -> u32 {
        let v = self.find(v);
        self.corners[v as usize]
    }

    fn fresh(&mut self) -> Result<u32, CoverError> {
        if self.parent.len() >= self.budget {
            return Err(CoverError::Budget(self.budget));
        }
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.slots.push([NONE; LINK_VERTICES]);
        self.corners.push(0);
        self.complete.push(false);
        self.queued.push(false);
        Ok(id)
    }

    fn push(&mut self, v: u32) {
        if !self.queued[v as usize] {
            self.queued[v as usize] = true;
            self.work.push(v);
        }
    }

    fn ensure_neighbor(&mut self, v: u32, g: usize) -> Result<u32, CoverError> {
        if let Some(w) = self.neighbor(v, g) {
            return Ok(w);
        }
        let v = self.find(v);
        let w = self.fresh()?;
        self.slots[v as usize][g] = w;
        self.slots[w as usize][g ^ 1] = v;
        self.push(v);
        self.push(w);
        Ok(w)
    }

    fn set_edge(&mut self, a: u32, s: i8, b: u32) -> Result<(), CoverError> {
        let g = departure_germ(s);
        let b = self.find(b);
        if let Some(x) = self.neighbor(a, g) {
            if x != b {
                self.merge(x, b)?;
            }
        }
        let a = self.find(a);
        if let Some(y) = self.neighbor(b, g ^ 1) {
            if y != a {
                self.merge(y, a)?;
            }
        }
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return Err(CoverError::Inconsistent(format!("letter {s} closes a loop")));
        }
        self.slots[a as usize][g] = b;
        self.slots[b as usize][g ^ 1] = a;
        self.push(a);
        self.push(b);
        Ok(())
    }

    fn merge(&mut self, x: u32, y: u32) -> Result<(), CoverError> {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            if self.complete[x as usize] && self.complete[y as usize] {
                return Err(CoverError::LateMerge(x, y));
            }
            let (keep, gone) = (x.min(y), x.max(y));
            self.parent[gone as usize] = keep;
            self.merges += 1;
            let gs = self.slots[gone as usize];
            for (g, &w) in gs.iter().enumerate() {
                if w == NONE {
                    continue;
                }
                let k = self.slots[keep as usize][g];
                if k == NONE {
                    self.slots[keep as usize][g] = w;
                } else {
                    pending.push((k, w));
                }
            }
            self.corners[keep as usize] |= self.corners[gone as usize];
            self.complete[keep as usize] |= self.complete[gone as usize];
            self.push(keep);
        }
        Ok(())
    }

    fn attach_corner(&mut self, v: u32, c: usize) -> Result<(), CoverError> {
        let (f, k) = (c / 3, c % 3);
        let face = self.link.faces()[f];
        let a = self.ensure_neighbor(v, departure_germ(face[k]))?;
        let b = self.ensure_neighbor(v, arrival_germ(face[(k + 1) % 3]))?;
        self.set_edge(a, face[(k + 2) % 3], b)?;
        let (v, a, b) = (self.find(v), self.find(a), self.find(b));
        if v == a || v == b || a == b {
            return Err(CoverError::Inconsistent(format!("face {} collapses", f + 1)));
        }
        self.corners[v as usize] |= 1 << c;
        self.corners[a as usize] |= 1 << (3 * f + (k + 2) % 3);
        self.corners[b as usize] |= 1 << (3 * f + (k + 1) % 3);
        self.push(v);
        self.push(a);
        self.push(b);
        Ok(())
    }

    /// One missing piece of the link geodesic between two present germs.
    fn closure_step(&mut self, v: u32) -> Result<bool, CoverError> {
        let v = self.find(v);
        let slots = self.slots[v as usize];
        let mask = self.corners[v as usize];
        if mask == ALL_CORNERS {
            return Ok(false);
        }
        let present: Vec<usize> = (0..LINK_VERTICES).filter(|&g| slots[g] != NONE).collect();
        for (i, &g) in present.iter().enumerate() {
            for &h in &present[i + 1..] {
                match self.link.distance(g, h) {
                    1 => {
                        let c = self.link.corner(g, h).expect("adjacent germs share a corner");
                        if mask & (1 << c) == 0 {
                            self.attach_corner(v, c)?;
                            return Ok(true);
                        }
                    }
                    2 => {
                        let m = self.link.midpoint(g, h).expect("distance two");
                        let c1 = self.link.corner(g, m).expect("adjacent");
                        let c2 = self.link.corner(m, h).expect("adjacent");
                        if mask & (1 << c1) == 0 {
                            self.attach_corner(v, c1)?;
                            return Ok(true);
                        }
                        if mask & (1 << c2) == 0 {
                            self.attach_corner(v, c2)?;
                            return Ok(true);
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(false)
    }

    /// Restores local convexity everywhere.
    fn close(&mut self) -> Result<(), CoverError> {
        while let Some(v) = self.work.pop() {
            self.queued[v as usize] = false;
            if self.parent[v as usize] != v {
                continue;
            }
            if self.closure_step(v)? {
                let r = self.find(v);
                self.push(r);
            }
        }
        Ok(())
    }

    /// Gives `v` all 16 neighbours and all 24 corners.
    pub fn complete(&mut self, v: u32) -> Result<(), CoverError> {
        if self.is_complete(v) {
            return Ok(());
        }
        for g in 0..LINK_VERTICES {
            self.ensure_neighbor(v, g)?;
            self.close()?;
        }
        let v = self.find(v);
        debug_assert_eq!(self.corners[v as usize], ALL_CORNERS);
        self.complete[v as usize] = true;
        Ok(())
    }

    /// Vertex reached from `v` by one signed letter.
    pub fn step(&mut self, v: u32, s: i8) -> Result<u32, CoverError> {
        super::check_letter(s)?;
        let w = self.ensure_neighbor(v, departure_germ(s))?;
        self.close()?;
        Ok(self.find(w))
    }

    /// Endpoint of the path spelling `word` from `v`.
    pub fn trace_from(&mut self, v: u32, word: &[i8]) -> Result<u32, CoverError> {
        let mut v = self.find(v);
        for &s in word {
            v = self.step(v, s)?;
        }
        Ok(self.find(v))
    }

    /// Whether `word` is trivial in the fundamental group.
    pub fn is_trivial(&mut self, word: &[i8]) -> Result<bool, CoverError> {
        let base = self.base();
        let end = self.trace_from(base, word)?;
        Ok(end == self.find(base))
    }

    /// Roots within distance `radius` of the base in the developed region,
    /// in breadth-first order by germ, with their distances.
    pub fn bfs(&mut self, radius: usize) -> Vec<(u32, usize)> {
        let base = self.base();
        let mut seen = std::collections::HashMap::new();
        seen.insert(base, 0usize);
        let mut order = vec![(base, 0usize)];
        let mut head = 0;
        while head < order.len() {
            let (v, d) = order[head];
            head += 1;
            if d == radius {
                continue;
            }
            for g in 0..LINK_VERTICES {
                if let Some(w) = self.neighbor(v, g) {
                    if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(w) {
                        e.insert(d + 1);
                        order.push((w, d + 1));
                    }
                }
            }
        }
        order
    }
}
