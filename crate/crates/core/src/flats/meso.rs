//! The mesoscopic lower bound construction in the cover of `V0_1`.
//!
//! Model coordinates put the centre `A` at the origin and `B = (0, -k)`.
//! The line `d1` through `B` runs along `e1` and reads `6`; the line `d2`
//! runs along `e2 - e1` and reads `g = 271834` from `B`. The sector between
//! them is labelled as in the flat `Π`, the half plane below `d1` by a stack
//! of period-1 strips and the region beyond `d2` by a stack of period-6
//! strips whose first layer has an `h = 65` boundary.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complexes::{departure_germ, presets, Presentation};
use crate::cover::{Developer, LocalLink};

use super::disks::canonical;
use super::labels::{FaceWalks, Labelling};
use super::model::{self, ModelTriangle, ModelVertex};
use super::strips::{is_power_of_rotation, label_strips, LabelStrip};
use super::FlatsError;

pub const G_WORD: [i8; 6] = [2, 7, 1, 8, 3, 4];
pub const H_WORD: [i8; 2] = [6, 5];

/// A flat invariant under `e1` translation, labelled row by row with
/// period `rows.len()` in the `e2` direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowPeriodicFlat {
    pub rows: Vec<i8>,
    pub up: Vec<i8>,
    pub cross: Vec<i8>,
}

impl RowPeriodicFlat {
    fn at(v: &[i8], b: i32) -> i8 {
        v[b.rem_euclid(v.len() as i32) as usize]
    }

    /// Labels of the edges of `tris`.
    pub fn labelling(&self, tris: &[ModelTriangle]) -> Labelling {
        let mut l = Labelling::new();
        for t in tris {
            let (a, b) = (t.a, t.b);
            l.set((a, b), (a + 1, b), Self::at(&self.rows, b));
            l.set((a, b + 1), (a + 1, b + 1), Self::at(&self.rows, b + 1));
            l.set((a, b), (a, b + 1), Self::at(&self.up, b));
            l.set((a + 1, b), (a + 1, b + 1), Self::at(&self.up, b));
            l.set((a + 1, b), (a, b + 1), Self::at(&self.cross, b));
        }
        l
    }
}

/// The flat `Π`: rows alternate `6` and `5` and the lines along `e2 - e1`
/// read `g` from every vertex of a row of index divisible by 6.
pub fn flat_pi(p: &Presentation) -> Result<RowPeriodicFlat, FlatsError> {
    let walks = FaceWalks::new(p);
    let window: Vec<ModelTriangle> = (-2..3)
        .flat_map(|a| (-8..8).flat_map(move |b| [true, false].map(|up| ModelTriangle { a, b, up })))
        .collect();
    for s in label_strips(p, &[6], G_WORD.len(), 1)? {
        let flat = RowPeriodicFlat {
            rows: s.rows[..G_WORD.len()].iter().map(|r| r[0]).collect(),
            up: s.up.iter().map(|r| r[0]).collect(),
            cross: s.cross.iter().map(|r| r[0]).collect(),
        };
        if flat.cross == G_WORD && flat.labelling(&window).check(&walks, &window).is_ok() {
            return Ok(flat);
        }
    }
    Err(FlatsError::Invalid("no flat with 6-rows crossed by g-lines".into()))
}

/// `μ_k = ⌈k(2/√3 − 1)⌉`, computed exactly: the least `μ` with
/// `(μ + k)² · 3 ≥ 4k²`.
pub fn mu(k: u32) -> u32 {
    let k = k as u64;
    (0..).find(|&m: &u64| 3 * (m + k) * (m + k) >= 4 * k * k).unwrap() as u32
}

/// Grid indices `m` with `m·√3/6` in `(k − √3, k]`.
pub fn grid_window(k: u32) -> Vec<u32> {
    let k2 = 12 * (k as u64) * (k as u64);
    (0..=4 * k).filter(|&m| (m as u64).pow(2) <= k2 && (m as u64 + 6).pow(2) > k2).collect()
}

/// Outcome of the construction for one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MesoCheck {
    pub k: u32,
    pub mu: u32,
    pub bound: u64,
    /// Number of disks `D_i` built, `ν_k²`.
    pub disks: usize,
    /// Pairwise distinct disks among them.
    pub constructed: usize,
    /// Least number of distinct concentric supports at a radius in
    /// `(k − √3, k]`.
    pub window_min: usize,
    pub distinct_disks: bool,
    pub all_flat: bool,
    /// Every disk fails to extend across `B`.
    pub obstructed: bool,
    /// Sphere labels at `B` read around the support, `3251` expected.
    pub sphere_labels: Vec<i8>,
    /// Vertices created while developing the disks in the cover.
    pub developed: usize,
    /// The disks develop injectively in the cover.
    pub injective: bool,
    pub pass: bool,
}

fn reflect_below(v: ModelVertex) -> ModelVertex {
    (v.0 + v.1, -v.1)
}

fn rotate_120(v: ModelVertex) -> ModelVertex {
    (-v.0 - v.1, v.0)
}

/// Labels of a strip placed by an isometry `f` and translated to `origin`.
fn strip_labels(s: &LabelStrip, cols: (i32, i32), f: fn(ModelVertex) -> ModelVertex, origin: ModelVertex) -> Labelling {
    let mut out = Labelling::new();
    for ((p, q), x) in s.labelling(cols.0, cols.1).entries() {
        let (p, q) = (f(p), f(q));
        out.set((p.0 + origin.0, p.1 + origin.1), (q.0 + origin.0, q.1 + origin.1), x);
    }
    out
}

/// Which part of the construction a triangle of the disk belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Sector,
    BelowD1,
    BeyondD2,
}

fn part(t: &ModelTriangle, k: i32) -> Part {
    // Centroid test in thirds of lattice units: below d1 when b < -k,
    // beyond d2 when a + b < -k (d2 is the line a + b = -k).
    let [p, q, r] = t.vertices();
    let (a3, b3) = (p.0 + q.0 + r.0, p.1 + q.1 + r.1);
    if b3 < -3 * k {
        Part::BelowD1
    } else if a3 + b3 < -3 * k {
        Part::BeyondD2
    } else {
        Part::Sector
    }
}

/// Develops a labelled region at the base of `dev` and checks that
/// distinct model vertices land on distinct cover vertices.
fn develop_injective(dev: &mut Developer, l: &Labelling) -> Result<bool, FlatsError> {
    let base = dev.base();
    let mut image: BTreeMap<ModelVertex, u32> = BTreeMap::from([((0, 0), base)]);
    let mut adj: BTreeMap<ModelVertex, Vec<(ModelVertex, i8)>> = BTreeMap::new();
    for ((p, q), s) in l.entries() {
        adj.entry(p).or_default().push((q, s));
        adj.entry(q).or_default().push((p, -s));
    }
    let mut stack = vec![(0, 0)];
    while let Some(v) = stack.pop() {
        let x = image[&v];
        for &(w, s) in adj.get(&v).map_or(&[][..], |a| a.as_slice()) {
            let y = dev.step(x, s)?;
            if let std::collections::btree_map::Entry::Vacant(e) = image.entry(w) {
                e.insert(y);
                stack.push(w);
            }
        }
    }
    let roots: BTreeSet<u32> = image.values().map(|&x| dev.find(x)).collect();
    let consistent = l.entries().into_iter().all(|((p, q), s)| {
        let (x, y) = (image[&p], image[&q]);
        dev.step(x, s).map(|z| dev.find(z) == dev.find(y)).unwrap_or(false)
    });
    Ok(consistent && roots.len() == image.len())
}

fn agrees(l: &Labelling, m: &Labelling, tris: &[ModelTriangle]) -> bool {
    tris.iter().all(|t| {
        let [a, b, c] = t.vertices();
        [(a, b), (b, c), (c, a)].iter().all(|&(x, y)| l.get(x, y).is_some() && l.get(x, y) == m.get(x, y))
    })
}

/// Copies labels of `src` on the edges of `tris` into `dst`.
fn fill(dst: &mut Labelling, src: &Labelling, tris: &[ModelTriangle]) {
    for t in tris {
        let [a, b, c] = t.vertices();
        for (x, y) in [(a, b), (b, c), (c, a)] {
            if let (None, Some(v)) = (dst.get(x, y), src.get(x, y)) {
                dst.set(x, y, v);
            }
        }
    }
}

/// The link path at `v` through the triangles of `tris` containing it, as
/// germs in order, and the labels of the opposite sides. `None` unless those
/// triangles form a single fan.
fn fan_at(l: &Labelling, tris: &[ModelTriangle], v: ModelVertex) -> Option<(Vec<usize>, Vec<i8>)> {
    let mut sides: Vec<(ModelVertex, ModelVertex)> = tris
        .iter()
        .filter_map(|t| {
            let vs = t.vertices();
            let i = vs.iter().position(|&x| x == v)?;
            Some((vs[(i + 1) % 3], vs[(i + 2) % 3]))
        })
        .collect();
    if sides.is_empty() {
        return None;
    }
    // Start at the side whose first end is no other side's second end.
    let start = sides.iter().position(|s| !sides.iter().any(|t| t.1 == s.0))?;
    let mut order = vec![sides.swap_remove(start)];
    while let Some(i) = sides.iter().position(|s| s.0 == order.last().unwrap().1) {
        order.push(sides.swap_remove(i));
    }
    if !sides.is_empty() {
        return None;
    }
    let mut germs = vec![departure_germ(l.get(v, order[0].0)?)];
    let mut labels = Vec::new();
    for &(x, y) in &order {
        germs.push(departure_germ(l.get(v, y)?));
        labels.push(l.get(x, y)?);
    }
    Some((germs, labels))
}

/// Runs the construction for `k ≥ 8` in the cover of `V0_1`.
pub fn meso_lower_bound_check(k: u32, budget: usize) -> Result<MesoCheck, FlatsError> {
    meso_check_at_phase(k, 0, budget)
}

/// The construction with `B` on a row of index `phase` in `Π`, so that `d2`
/// reads `g` rotated by `phase` from `B`.
pub fn meso_check_at_phase(k: u32, phase: usize, budget: usize) -> Result<MesoCheck, FlatsError> {
    if k < 8 {
        return Err(FlatsError::Invalid(format!("k = {k} is below the threshold 8")));
    }
    if phase % 2 == 1 || phase >= G_WORD.len() {
        return Err(FlatsError::Invalid(format!("phase {phase} is not a 6-row of the flat")));
    }
    let p = presets::preset("V0_1").expect("V0_1 is a preset").presentation();
    let walks = FaceWalks::new(&p);
    let link = LocalLink::new(&p)?;
    let pi = flat_pi(&p)?;
    let mu = mu(k);
    let ki = k as i32;
    let corner: ModelVertex = (0, -ki);
    let support = model::disk_support_sq(k as u64 * k as u64, 1);
    let of_part = |want: Part| -> Vec<ModelTriangle> { support.iter().copied().filter(|t| part(t, ki) == want).collect() };
    let (sector, below, beyond) = (of_part(Part::Sector), of_part(Part::BelowD1), of_part(Part::BeyondD2));
    if below.iter().any(|t| t.vertices().iter().map(|v| v.0 + v.1).sum::<i32>() < -3 * ki) {
        return Err(FlatsError::Invalid("disk reaches behind B".into()));
    }

    // Π shifted so that the row through B has index 0.
    let shifted = |v: &[i8]| -> Vec<i8> { (0..6).map(|b| RowPeriodicFlat::at(v, b + ki + phase as i32)).collect() };
    let pi_here = RowPeriodicFlat {
        rows: shifted(&pi.rows),
        up: shifted(&pi.up),
        cross: shifted(&pi.cross),
    };
    let pi_labels = pi_here.labelling(&support);
    let first_below: Vec<ModelTriangle> = below.iter().copied().filter(|t| t.b == -ki - 1).collect();

    let span = 3 * ki;
    let s_stacks: Vec<Labelling> = label_strips(&p, &[6], mu as usize, 1)?
        .iter()
        .map(|s| strip_labels(s, (-span, span), reflect_below, corner))
        .filter(|l| agrees(l, &pi_labels, &first_below))
        .collect();
    let d2: Vec<i8> = (0..G_WORD.len()).map(|i| G_WORD[(i + phase) % G_WORD.len()]).collect();
    let t_stacks: Vec<Labelling> = label_strips(&p, &d2, mu as usize, G_WORD.len())?
        .iter()
        .filter(|s| s.period == G_WORD.len() && is_power_of_rotation(&s.rows[1], &H_WORD))
        .map(|s| strip_labels(s, (-span, span), rotate_120, corner))
        .collect();

    let mut disks = Vec::new();
    for s in &s_stacks {
        for t in &t_stacks {
            let mut l = Labelling::new();
            fill(&mut l, &pi_labels, &sector);
            fill(&mut l, s, &below);
            fill(&mut l, t, &beyond);
            disks.push(l);
        }
    }
    let nu = 1usize << (mu - 1);
    let all_flat = disks.iter().all(|l| l.check(&walks, &support).is_ok());
    let distinct: BTreeSet<_> = disks.iter().map(canonical).collect();
    let distinct_disks = s_stacks.len() == nu && t_stacks.len() == nu && distinct.len() == disks.len();

    // Concentric supports of radius r over (k − √3, k].
    let mut radii: Vec<(u64, u64)> = grid_window(k).into_iter().map(|m| (m as u64 * m as u64, 12)).collect();
    radii.push((k as u64 * k as u64, 1));
    let window_min = radii
        .iter()
        .map(|&(num, den)| {
            let inner = model::disk_support_sq(num, den);
            disks.iter().map(|l| canonical(&l.restrict(&inner))).collect::<BTreeSet<_>>().len()
        })
        .min()
        .unwrap_or(0);

    // No 6-cycle of the link at B extends the fan of the support there.
    let mut obstructed = !disks.is_empty();
    let mut sphere_labels = Vec::new();
    for l in &disks {
        match fan_at(l, &support, corner) {
            Some((germs, labels)) => {
                let ends = link.distance(germs[0], *germs.last().unwrap());
                obstructed &= germs.len() == 5 && ends != 2;
                sphere_labels = labels;
            }
            None => obstructed = false,
        }
    }

    let mut dev = Developer::new(&p, budget)?;
    let mut injective = true;
    for l in &disks {
        injective &= develop_injective(&mut dev, l)?;
    }
    let bound = 1u64 << (2 * mu - 4);
    let constructed = distinct.len();
    let pass = all_flat && distinct_disks && obstructed && injective && constructed as u64 >= bound;
    Ok(MesoCheck {
        k,
        mu,
        bound,
        disks: disks.len(),
        constructed,
        window_min,
        distinct_disks,
        all_flat,
        obstructed,
        sphere_labels,
        developed: dev.created(),
        injective,
        pass,
    })
}
