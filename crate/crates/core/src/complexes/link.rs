//! The link of the single vertex.
//!
//! Link vertex `i♭` is the germ of loop `i` where it leaves the vertex and
//! `i♯` the germ where it returns. The boundary of a face `[x, y, z]` is the
//! closed walk reading `z`, then `y`, then `x`; each of its three corners
//! joins the germ the walk departs along to the germ it arrived along.

use crate::linkgraph::{End, LinkGraph, VertexLabel};

use super::{ComplexError, Presentation};

pub const LINK_VERTICES: usize = 16;

/// Index of link vertex `letter` + `end` (`letter` in `1..=8`).
pub fn germ_index(letter: u8, end: End) -> usize {
    2 * (letter as usize - 1) + usize::from(end == End::Sharp)
}

pub fn germ_label(g: usize) -> VertexLabel {
    VertexLabel {
        letter: (g / 2 + 1) as u8,
        end: if g.is_multiple_of(2) { End::Flat } else { End::Sharp },
    }
}

/// Germ index of the same loop at the other end.
pub fn opposite_germ(g: usize) -> usize {
    g ^ 1
}

/// Germ a walk leaves along when it next reads signed letter `s`.
pub fn departure_germ(s: i8) -> usize {
    let end = if s > 0 { End::Flat } else { End::Sharp };
    germ_index(s.unsigned_abs(), end)
}

/// Germ a walk comes in along after reading signed letter `s`.
pub fn arrival_germ(s: i8) -> usize {
    opposite_germ(departure_germ(s))
}

/// One corner of one face, seen as an edge of the link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub face: usize,
    /// Position of the letter the walk departs along.
    pub slot: usize,
    /// Germ of `face[slot]`, departing.
    pub departure: usize,
    /// Germ of `face[slot + 1]`, arriving.
    pub arrival: usize,
}

/// All 24 corners, in face order and then slot order.
pub fn corners(p: &Presentation) -> Vec<Corner> {
    let mut out = Vec::with_capacity(24);
    for (fi, f) in p.faces().iter().enumerate() {
        for slot in 0..3 {
            out.push(Corner {
                face: fi,
                slot,
                departure: departure_germ(f[slot]),
                arrival: arrival_germ(f[(slot + 1) % 3]),
            });
        }
    }
    out
}

/// Raw corner edges, possibly with loops or repeats.
pub fn link_edges(p: &Presentation) -> Vec<(usize, usize)> {
    corners(p).iter().map(|c| (c.departure, c.arrival)).collect()
}

/// The labelled link graph; fails if two corners give the same edge or a
/// corner is a loop.
pub fn link_of(p: &Presentation) -> Result<LinkGraph, ComplexError> {
    let g = LinkGraph::from_edges(LINK_VERTICES, &link_edges(p))
        .map_err(|e| ComplexError::DegenerateLink(e.to_string()))?;
    Ok(g
        .with_labels((0..LINK_VERTICES).map(germ_label).collect())
        .expect("germ labels are distinct"))
}

/// Whether the link is trivalent of girth exactly 6.
pub fn is_rank74(p: &Presentation) -> bool {
    match link_of(p) {
        Ok(g) => g.is_ample() && g.n() == LINK_VERTICES,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn germ_round_trip() {
        for g in 0..16 {
            let l = germ_label(g);
            assert_eq!(germ_index(l.letter, l.end), g);
        }
        assert_eq!(departure_germ(3), germ_index(3, End::Flat));
        assert_eq!(arrival_germ(3), germ_index(3, End::Sharp));
        assert_eq!(departure_germ(-3), germ_index(3, End::Sharp));
    }

    #[test]
    fn positive_face_edges() {
        let rows = [
            [1, 2, 6],
            [2, 3, 7],
            [3, 4, 8],
            [4, 5, 1],
            [5, 6, 2],
            [6, 7, 3],
            [7, 8, 4],
            [8, 1, 5],
        ];
        let p = Presentation::from_rows(&rows).unwrap();
        let e = link_edges(&p);
        let flat = |i| germ_index(i, End::Flat);
        let sharp = |i| germ_index(i, End::Sharp);
        assert_eq!(&e[..3], &[(flat(1), sharp(2)), (flat(2), sharp(6)), (flat(6), sharp(1))]);
    }
}
