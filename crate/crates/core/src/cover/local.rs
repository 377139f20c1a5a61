//! Label-level data of the vertex link used during development.

use crate::complexes::{arrival_germ, departure_germ, link_of, Face, Presentation, LINK_VERTICES};
use crate::linkgraph::Girth;

use super::CoverError;

pub(crate) const NO_GERM: u8 = u8::MAX;

/// Distances, midpoints and corner lookup on the 16 germs.
#[derive(Clone, Debug)]
pub struct LocalLink {
    faces: Vec<Face>,
    dist: [[u8; LINK_VERTICES]; LINK_VERTICES],
    mid: [[u8; LINK_VERTICES]; LINK_VERTICES],
    corner: [[u8; LINK_VERTICES]; LINK_VERTICES],
}

impl LocalLink {
    /// Requires a simple link of girth at least 6.
    pub fn new(p: &Presentation) -> Result<Self, CoverError> {
        let g = link_of(p).map_err(|e| CoverError::Link(e.to_string()))?;
        if let Girth::Finite(n) = g.girth() {
            if n < 6 {
                return Err(CoverError::Link(format!("link has a cycle of length {n}")));
            }
        }
        let mut dist = [[u8::MAX; LINK_VERTICES]; LINK_VERTICES];
        for (a, row) in dist.iter_mut().enumerate() {
            for (b, d) in g.distances_from(a).into_iter().enumerate() {
                row[b] = u8::try_from(d).unwrap_or(u8::MAX);
            }
        }
        let mut mid = [[NO_GERM; LINK_VERTICES]; LINK_VERTICES];
        for a in 0..LINK_VERTICES {
            for b in 0..LINK_VERTICES {
                if dist[a][b] == 2 {
                    // Unique, the girth being at least 6.
                    mid[a][b] = g
                        .neighbors(a)
                        .iter()
                        .copied()
                        .find(|&m| dist[m][b] == 1)
                        .expect("distance two has a midpoint") as u8;
                }
            }
        }
        let mut corner = [[NO_GERM; LINK_VERTICES]; LINK_VERTICES];
        for (fi, f) in p.faces().iter().enumerate() {
            for k in 0..3 {
                let d = departure_germ(f[k]);
                let a = arrival_germ(f[(k + 1) % 3]);
                corner[d][a] = (3 * fi + k) as u8;
                corner[a][d] = (3 * fi + k) as u8;
            }
        }
        Ok(LocalLink {
            faces: p.faces().to_vec(),
            dist,
            mid,
            corner,
        })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        self.dist[a][b] as usize
    }

    pub(crate) fn midpoint(&self, a: usize, b: usize) -> Option<usize> {
        let m = self.mid[a][b];
        (m != NO_GERM).then_some(m as usize)
    }

    /// Corner id `3 * face + slot` of the link edge `a - b`.
    pub(crate) fn corner(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.corner[a][b];
        (c != NO_GERM).then_some(c as usize)
    }

    /// The germs joined by a corner: (departure, arrival).
    pub fn corner_germs(&self, c: usize) -> (usize, usize) {
        let f = &self.faces[c / 3];
        let k = c % 3;
        (departure_germ(f[k]), arrival_germ(f[(k + 1) % 3]))
    }

    /// The unique germ at distance 4 from `g`, if there is exactly one.
    pub fn antipode(&self, g: usize) -> Option<usize> {
        let mut far = (0..LINK_VERTICES).filter(|&h| self.dist[g][h] == 4);
        match (far.next(), far.next()) {
            (Some(h), None) => Some(h),
            _ => None,
        }
    }
}

/// Signed letter leaving along germ `g`.
pub fn letter_of_departure(g: usize) -> i8 {
    let l = (g / 2 + 1) as i8;
    if g.is_multiple_of(2) {
        l
    } else {
        -l
    }
}
