//! Flat regions of the universal cover: hexagons, disks, strips and
//! equilateral triangles, the mesoscopic profile, and a free semigroup
//! probe.
//!
//! Every vertex of the cover has the same labelled link, so flats are first
//! enumerated as labellings of model regions (see [`labels`]) and then
//! placed at a vertex of a [`CoverBall`] when a patch is wanted.

pub mod disks;
pub mod labels;
pub mod meso;
pub mod model;
pub mod probe;
pub mod search;
pub mod strips;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::cover::{CoverBall, CoverError};

pub use disks::{
    canonical, distinct_flat_labellings, flat_disks_at, flat_triangle_count, flat_triangles_over, margin_steps, meso_interval,
    mesoscopic_profile, Profile, ProfileRow,
};
pub use labels::{FaceWalks, Labelling};
pub use meso::{flat_pi, grid_window, meso_check_at_phase, meso_lower_bound_check, mu, MesoCheck, RowPeriodicFlat, G_WORD, H_WORD};
pub use probe::{free_semigroup_probe, product_endpoints};
pub use model::{ModelTriangle, ModelVertex};
pub use search::{FlatSearch, Region};
pub use strips::{
    is_power_of_rotation, label_strips, strips_on_geodesic, strips_on_geodesic_from, LabelStrip, StripPatch,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlatsError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("ball of radius {have} is too small, need radius {need}")]
    BallTooSmall { need: usize, have: usize },
    #[error("word is not a geodesic: {0}")]
    NotGeodesic(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

/// A flat region of the model placed in a ball: model vertices and
/// triangles with their images, both sorted by model coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatPatch {
    pub vertices: Vec<(ModelVertex, usize)>,
    pub triangles: Vec<(ModelTriangle, usize)>,
}

impl FlatPatch {
    /// Places a labelled region with the model origin at `origin`. The
    /// labelling must contain the origin and be edge-connected.
    pub fn place(
        b: &CoverBall,
        origin: usize,
        labels: &Labelling,
        tris: &[ModelTriangle],
    ) -> Result<FlatPatch, FlatsError> {
        let mut adj: BTreeMap<ModelVertex, Vec<(ModelVertex, i8)>> = BTreeMap::new();
        for ((p, q), s) in labels.entries() {
            adj.entry(p).or_default().push((q, s));
            adj.entry(q).or_default().push((p, -s));
        }
        if !adj.contains_key(&(0, 0)) {
            return Err(FlatsError::Invalid("labelling does not contain the origin".into()));
        }
        let mut image: BTreeMap<ModelVertex, usize> = BTreeMap::from([((0, 0), origin)]);
        let mut queue = VecDeque::from([(0, 0)]);
        while let Some(v) = queue.pop_front() {
            let x = image[&v];
            for &(w, s) in &adj[&v] {
                let y = b.step(x, s).ok_or(FlatsError::BallTooSmall {
                    need: b.radius() + 1,
                    have: b.radius(),
                })?;
                match image.get(&w) {
                    Some(&z) if z != y => {
                        return Err(FlatsError::Invalid(format!("labels around {w:?} do not close up")));
                    }
                    Some(_) => {}
                    None => {
                        image.insert(w, y);
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut seen = BTreeSet::new();
        if !image.values().all(|&x| seen.insert(x)) {
            return Err(FlatsError::Invalid("placement is not injective on vertices".into()));
        }
        let mut triangles = Vec::with_capacity(tris.len());
        for t in tris {
            let vs = t.vertices().map(|v| image.get(&v).copied());
            let [Some(x), Some(y), Some(z)] = vs else {
                return Err(FlatsError::Invalid(format!("triangle {t:?} is not labelled")));
            };
            let mut want = [x, y, z];
            want.sort_unstable();
            let found = b.triangles_at(x).into_iter().find(|&i| {
                let mut got = b.triangles()[i].vertices;
                got.sort_unstable();
                got == want
            });
            let i = found.ok_or_else(|| FlatsError::Invalid(format!("triangle {t:?} is not a face of the ball")))?;
            triangles.push((*t, i));
        }
        triangles.sort_unstable();
        Ok(FlatPatch {
            vertices: image.into_iter().collect(),
            triangles,
        })
    }

    /// Sorted cover triangles of the patch.
    pub fn image(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.triangles.iter().map(|&(_, i)| i).collect();
        out.sort_unstable();
        out
    }
}
