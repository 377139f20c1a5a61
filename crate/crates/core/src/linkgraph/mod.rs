//! Finite graphs seen as vertex links: girth, ampleness, canonical labelling,
//! automorphisms, random-walk spectra and enumeration of ample cubic graphs.

mod canon;
mod enumerate;
mod graph;
pub mod named;
mod spectrum;
mod structure;

use thiserror::Error;

pub use canon::{automorphisms, canonical_form, isomorphic, CanonicalForm};
pub use enumerate::{enumerate_ample_cubic, EnumerationOptions, DEFAULT_MAX_VERTICES};
pub use graph::{End, Girth, LinkGraph, VertexLabel};
pub use spectrum::{random_walk_spectrum, Spectrum, SPECTRUM_TOLERANCE};
pub use structure::{
    automorphism_group_order, count_paths_of_length3, pair_type, six_cycle_analysis, six_cycles,
    AutomorphismReport, PairType, SixCycleReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("repeated edge {0}-{1}")]
    MultiEdge(usize, usize),
    #[error("label {0} used twice")]
    DuplicateLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is empty")]
    Empty,
    #[error("vertices {0} and {1} are at distance {2}, not 3")]
    NotAtDistanceThree(usize, usize, usize),
    #[error("{2} paths of length 3 join {0} and {1}")]
    UnexpectedPathCount(usize, usize, usize),
    #[error("n = {0} exceeds the enumeration cap of {1} vertices")]
    Budget(usize, usize),
    #[error("n = {0} must be even and at least 4")]
    BadOrder(usize),
}
