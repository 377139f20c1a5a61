//! One-vertex triangle complexes with 8 loops and 8 faces: presentations,
//! the vertex link, and the classification of those with ample links.

mod classify;
mod link;
mod presentation;
pub mod presets;

use thiserror::Error;

pub use classify::{
    canonical_presentation, classify_orientable, classify_signed, classify_six_cases,
    presentations_isomorphic, ComplexClass, SearchMode, SignedSearchReport, SIX_CASES,
};
pub use link::{
    arrival_germ, corners, departure_germ, germ_index, germ_label, is_rank74, link_edges, link_of,
    opposite_germ, Corner, LINK_VERTICES,
};
pub use presentation::{
    euler_characteristic, parse_presentation, Face, Presentation, TypeTag, FACES, LETTERS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("malformed presentation: {0}")]
    Parse(String),
    #[error("expected 8 faces, found {0}")]
    FaceCount(usize),
    #[error("letter {0} is outside 1..=8")]
    LetterOutOfRange(i64),
    #[error("letter {letter} occurs {count} times, expected 3")]
    LetterCount { letter: usize, count: usize },
    #[error("link is not a simple graph: {0}")]
    DegenerateLink(String),
}
