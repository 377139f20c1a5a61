//! Development of the universal cover, word tracing, geodesics, rings and
//! a Gauss–Bonnet audit for disks.
//!
//! Vertices of the cover are group elements; the edge `v --i--> v·a_i`
//! leaves `v` along germ `i♭` and enters `v·a_i` along germ `i♯`.

mod audit;
mod ball;
mod develop;
mod local;
mod rings;

use thiserror::Error;

use crate::complexes::{arrival_germ, departure_germ};

pub use audit::{gauss_bonnet_audit, grow_random_disk, interior_curvatures, validate_disk, DiskShape};
pub use ball::{develop_ball, BallStats, CoverBall, Edge, Path, Triangle};
pub use develop::Developer;
pub use local::{letter_of_departure, LocalLink};
pub use rings::{continuation, covered_letters, rings, Ring};

/// Default cap on the number of developed vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("vertex budget of {0} exceeded")]
    Budget(usize),
    #[error("link unusable for development: {0}")]
    Link(String),
    #[error("development is inconsistent: {0}")]
    Inconsistent(String),
    #[error("completed vertices {0} and {1} were identified")]
    LateMerge(u32, u32),
    #[error("signed letter {0} is outside ±1..=8")]
    Letter(i64),
    #[error("bad word: {0}")]
    Word(String),
    #[error("path leaves the developed ball")]
    OutOfBall,
    #[error("not a disk: {0}")]
    NotADisk(String),
}

pub(crate) fn check_letter(s: i8) -> Result<(), CoverError> {
    if s == 0 || s.unsigned_abs() > 8 {
        return Err(CoverError::Letter(s as i64));
    }
    Ok(())
}

/// Parses signed letters separated by spaces or commas, e.g. `"6 1 -5 -1"`.
pub fn parse_word(text: &str) -> Result<Vec<i8>, CoverError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let v: i64 = t.parse().map_err(|_| CoverError::Word(format!("`{t}` is not a letter")))?;
            if v == 0 || v.abs() > 8 {
                return Err(CoverError::Letter(v));
            }
            Ok(v as i8)
        })
        .collect()
}

/// `w` read `n` times.
pub fn power(w: &[i8], n: usize) -> Vec<i8> {
    w.repeat(n)
}

pub fn inverse(w: &[i8]) -> Vec<i8> {
    w.iter().rev().map(|&s| -s).collect()
}

/// `a b a⁻¹ b⁻¹`.
pub fn commutator(a: &[i8], b: &[i8]) -> Vec<i8> {
    [a, b, &inverse(a), &inverse(b)].concat()
}

/// Whether consecutive letters meet at angle at least π, i.e. the arrival
/// germ of one and the departure germ of the next are at link distance at
/// least 3. With `cyclic`, the last letter is also checked against the first.
pub fn letters_are_geodesic(link: &LocalLink, letters: &[i8], cyclic: bool) -> bool {
    let n = letters.len();
    let pairs = if cyclic { n } else { n.saturating_sub(1) };
    (0..pairs).all(|i| {
        let (s, t) = (letters[i], letters[(i + 1) % n]);
        link.distance(arrival_germ(s), departure_germ(t)) >= 3
    })
}

/// Anything that can send words from a base point to comparable endpoints.
pub trait WordTracer {
    /// Endpoint of `word` read from the base, `None` if it cannot be traced.
    fn endpoint(&mut self, word: &[i8]) -> Result<Option<u64>, CoverError>;

    /// Brings an earlier endpoint up to date with later identifications.
    fn resolve(&mut self, id: u64) -> u64 {
        id
    }
}

impl WordTracer for CoverBall {
    fn endpoint(&mut self, word: &[i8]) -> Result<Option<u64>, CoverError> {
        for &s in word {
            check_letter(s)?;
        }
        Ok(self.trace(word).map(|v| v as u64))
    }
}

impl WordTracer for Developer {
    fn endpoint(&mut self, word: &[i8]) -> Result<Option<u64>, CoverError> {
        let base = self.base();
        Ok(Some(self.trace_from(base, word)? as u64))
    }

    fn resolve(&mut self, id: u64) -> u64 {
        self.find(id as u32) as u64
    }
}
