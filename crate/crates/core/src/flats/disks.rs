//! Flat hexagons, disk supports, the finite-scale mesoscopic profile and
//! flat equilateral triangles.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::Presentation;
use crate::cover::{CoverBall, Path};

use super::labels::Labelling;
use super::model::{self, ModelTriangle, ModelVertex};
use super::search::{FlatSearch, Region};
use super::{FlatPatch, FlatsError};

/// Canonical form of a labelling centred at the origin, up to the twelve
/// lattice isometries fixing it.
pub fn canonical(l: &Labelling) -> Vec<((ModelVertex, ModelVertex), i8)> {
    model::symmetries()
        .into_iter()
        .map(|f| l.mapped(f).entries())
        .min()
        .unwrap_or_default()
}

/// Flat labellings of `tris`, one per image (isometric relabellings of a
/// region symmetric about the origin give the same image).
pub fn distinct_flat_labellings(p: &Presentation, tris: &[ModelTriangle]) -> Vec<Labelling> {
    let region = Region::new(tris);
    let actions = region.symmetry_actions();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    FlatSearch::new(p).for_each(&region, &Labelling::new(), &mut |l| {
        if seen.insert(Region::canonical_labels(l, &actions)) {
            out.push(region.labelling(l));
        }
        true
    });
    out
}

fn need_radius(b: &CoverBall, need: usize) -> Result<(), FlatsError> {
    if need > b.radius() {
        return Err(FlatsError::BallTooSmall { need, have: b.radius() });
    }
    Ok(())
}

/// All flat hexagons of simplicial radius `n` centred at `a`, each image once.
pub fn flat_disks_at(b: &CoverBall, p: &Presentation, a: usize, n: usize) -> Result<Vec<FlatPatch>, FlatsError> {
    need_radius(b, b.distance(a) + n + 1)?;
    if n == 0 {
        return Ok(vec![FlatPatch {
            vertices: vec![((0, 0), a)],
            triangles: Vec::new(),
        }]);
    }
    let tris = model::hexagon(n as i32);
    distinct_flat_labellings(p, &tris)
        .iter()
        .map(|l| FlatPatch::place(b, a, l, &tris))
        .collect()
}

/// Endpoints of the interval `I_p = ((2p+1)√3/2, √(3p(p+1)+1)]`.
pub fn meso_interval(p: u32) -> (f64, f64) {
    let p = p as f64;
    ((2.0 * p + 1.0) * 3f64.sqrt() / 2.0, (3.0 * p * (p + 1.0) + 1.0).sqrt())
}

/// One radius of a profile.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileRow {
    /// Grid index: the radius is `m·√3/6`.
    pub m: u32,
    pub radius: f64,
    /// Distinct flat-disk supports of this radius.
    pub supports: usize,
    /// Supports with no flat extension by the margin.
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Profile {
    pub center: usize,
    pub margin: f64,
    pub rows: Vec<ProfileRow>,
}

impl Profile {
    /// Plot-ready `r,count` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,r,supports,count\n");
        for row in &self.rows {
            out.push_str(&format!("{},{:.6},{},{}\n", row.m, row.radius, row.supports, row.count));
        }
        out
    }
}

/// Grid steps needed to cover a Euclidean margin: the least `d` with
/// `d·√3/6 ≥ margin`.
pub fn margin_steps(margin: f64) -> u32 {
    let mut d = (margin * 6.0 / 3f64.sqrt()).floor().max(0.0) as u32;
    while model::grid_radius(d) + 1e-12 < margin {
        d += 1;
    }
    d
}

/// Finite-scale mesoscopic profile at `a` over grid radii `radii` (in units
/// of `√3/6`), counting supports with no flat extension by `margin`.
pub fn mesoscopic_profile(
    b: &CoverBall,
    p: &Presentation,
    a: usize,
    radii: &[u32],
    margin: f64,
) -> Result<Profile, FlatsError> {
    if margin < 0.0 || !margin.is_finite() {
        return Err(FlatsError::Invalid(format!("margin {margin} must be a finite nonnegative number")));
    }
    let step = margin_steps(margin);
    if let Some(&top) = radii.iter().max() {
        let reach = model::grid_radius(top + step);
        need_radius(b, b.distance(a) + reach.ceil() as usize + 1)?;
    }
    let search = FlatSearch::new(p);
    let mut rows = Vec::with_capacity(radii.len());
    for &m in radii {
        let inner = model::disk_support(m);
        let supports = distinct_flat_labellings(p, &inner);
        let outer = Region::new(&model::disk_support(m + step));
        let count = supports.par_iter().filter(|l| !search.extends(&outer, l)).count();
        rows.push(ProfileRow {
            m,
            radius: model::grid_radius(m),
            supports: supports.len(),
            count,
        });
    }
    Ok(Profile {
        center: a,
        margin,
        rows,
    })
}

/// Number of flat equilateral triangles with the given geodesic base.
pub fn flat_triangle_count(b: &CoverBall, p: &Presentation, base: &Path) -> Result<u64, FlatsError> {
    let r = base.letters.len();
    if r == 0 {
        return Err(FlatsError::Invalid("the base has length 0".into()));
    }
    need_radius(b, b.distance(base.start) + 2 * r + 1)?;
    if !b.is_geodesic(base)? {
        return Err(FlatsError::NotGeodesic(format!("{:?}", base.letters)));
    }
    Ok(flat_triangles_over(p, &base.letters))
}

/// Flat equilateral triangles over a base spelling `letters`, counted at
/// the label level.
pub fn flat_triangles_over(p: &Presentation, letters: &[i8]) -> u64 {
    let mut fixed = Labelling::new();
    for (i, &s) in letters.iter().enumerate() {
        fixed.set((i as i32, 0), (i as i32 + 1, 0), s);
    }
    let region = Region::new(&model::equilateral(letters.len() as i32));
    FlatSearch::new(p).count(&region, &fixed)
}
