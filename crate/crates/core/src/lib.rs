//! Tools for one-vertex triangle complexes whose links are the 16-vertex
//! ample trivalent graph: link graphs, presentations and their
//! classification, homology, universal-cover development, and flats.

pub mod complexes;
pub mod cover;
pub mod flats;
pub mod homology;
pub mod linkgraph;
