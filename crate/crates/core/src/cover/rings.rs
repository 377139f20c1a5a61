//! Analytic continuation of geodesics through the vertex link.
//!
//! A geodesic arriving along germ `g` continues straight through the vertex
//! along the germ at link distance 4, which is unique in the 16-vertex
//! ample graph. Following this rule from each of the 16 signed letters
//! gives a permutation; its cycles are the rings.

use std::fmt;

use serde::Serialize;

use crate::complexes::{arrival_germ, Presentation, LINK_VERTICES};

use super::local::{letter_of_departure, LocalLink};
use super::CoverError;

/// A closed analytic geodesic of the quotient, as a cyclic word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Ring {
    pub letters: Vec<i8>,
}

impl Ring {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same ring read backwards.
    pub fn reversed(&self) -> Ring {
        Ring {
            letters: self.letters.iter().rev().map(|&s| -s).collect(),
        }
    }

    /// Least rotation of the word or of its reversal, letters ordered
    /// `1 < 1⁻ < 2 < ...`.
    pub fn canonical(&self) -> Ring {
        let key = |w: &[i8]| -> Vec<(u8, bool)> { w.iter().map(|&s| (s.unsigned_abs(), s < 0)).collect() };
        let mut best: Option<Vec<i8>> = None;
        for w in [self.letters.clone(), self.reversed().letters] {
            for r in 0..w.len().max(1) {
                let mut c = w.clone();
                c.rotate_left(r);
                if best.as_ref().is_none_or(|b| key(&c) < key(b)) {
                    best = Some(c);
                }
            }
        }
        Ring {
            letters: best.unwrap_or_default(),
        }
    }

    /// Equality up to rotation and reversal.
    pub fn same_as(&self, other: &Ring) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i8::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The letter following `s` on its analytic geodesic.
pub fn continuation(link: &LocalLink, s: i8) -> Result<i8, CoverError> {
    let g = arrival_germ(s);
    let h = link
        .antipode(g)
        .ok_or_else(|| CoverError::Link(format!("germ {g} has no unique antipode")))?;
    Ok(letter_of_departure(h))
}

/// The cycles of the continuation permutation, each listed once up to
/// rotation and reversal, sorted.
pub fn rings(p: &Presentation) -> Result<Vec<Ring>, CoverError> {
    let link = LocalLink::new(p)?;
    let mut seen = [false; LINK_VERTICES];
    let mut out: Vec<Ring> = Vec::new();
    for g in 0..LINK_VERTICES {
        if seen[g] {
            continue;
        }
        let start = letter_of_departure(g);
        let mut letters = Vec::new();
        let mut s = start;
        loop {
            let idx = crate::complexes::departure_germ(s);
            if seen[idx] {
                break;
            }
            seen[idx] = true;
            letters.push(s);
            s = continuation(&link, s)?;
        }
        if s != start {
            return Err(CoverError::Link("continuation is not a permutation".into()));
        }
        out.push(Ring { letters }.canonical());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of distinct signed letters on the rings and their reversals.
pub fn covered_letters(rings: &[Ring]) -> usize {
    let mut all = std::collections::BTreeSet::new();
    for r in rings {
        all.extend(r.letters.iter().copied());
        all.extend(r.reversed().letters);
    }
    all.len()
}
