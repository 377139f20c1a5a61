//! Periodic flat strips along a periodic geodesic.
//!
//! Model rows `0..=height` carry the strip; row 0 is the given geodesic read
//! left to right. In layer `j` the edge `(a, j) -> (a, j+1)` is labelled
//! `up[j][a]` and `(a+1, j) -> (a, j+1)` is labelled `cross[j][a]`. Once the
//! first `up` letter of a layer is chosen the rest of the layer is forced:
//! the link path at each bottom vertex has length 3 between germs at
//! distance 3, and its middle is unique once one end step is known.

use crate::complexes::{departure_germ, Presentation};
use crate::cover::{letter_of_departure, letters_are_geodesic, CoverBall, LocalLink};

use super::labels::{FaceWalks, Labelling};
use super::model::ModelTriangle;
use super::{FlatPatch, FlatsError};

/// A strip given by its labels over one period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelStrip {
    pub period: usize,
    pub height: usize,
    /// Row words over one period, bottom first.
    pub rows: Vec<Vec<i8>>,
    pub up: Vec<Vec<i8>>,
    pub cross: Vec<Vec<i8>>,
}

impl LabelStrip {
    pub fn bottom(&self) -> &[i8] {
        &self.rows[0]
    }

    /// The opposite boundary word over one period.
    pub fn top(&self) -> &[i8] {
        &self.rows[self.height]
    }

    /// Labels of columns `from..to`.
    pub fn labelling(&self, from: i32, to: i32) -> Labelling {
        let p = self.period as i32;
        let at = |v: &Vec<i8>, a: i32| v[a.rem_euclid(p) as usize];
        let mut l = Labelling::new();
        for j in 0..=self.height as i32 {
            for a in from..to {
                l.set((a, j), (a + 1, j), at(&self.rows[j as usize], a));
                if j < self.height as i32 {
                    l.set((a, j), (a, j + 1), at(&self.up[j as usize], a));
                    l.set((a + 1, j), (a, j + 1), at(&self.cross[j as usize], a));
                }
            }
            if j < self.height as i32 {
                l.set((to, j), (to, j + 1), at(&self.up[j as usize], to));
            }
        }
        l
    }

    /// Model triangles of columns `from..to`.
    pub fn triangles(&self, from: i32, to: i32) -> Vec<ModelTriangle> {
        let mut out = Vec::new();
        for b in 0..self.height as i32 {
            for a in from..to {
                out.push(ModelTriangle { a, b, up: true });
                out.push(ModelTriangle { a, b, up: false });
            }
        }
        out
    }
}

/// Whether `word` is a rotation of a power of `unit`.
pub fn is_power_of_rotation(word: &[i8], unit: &[i8]) -> bool {
    if unit.is_empty() || !word.len().is_multiple_of(unit.len()) {
        return false;
    }
    let target: Vec<i8> = unit.iter().copied().cycle().take(word.len()).collect();
    (0..word.len()).any(|r| word[r..].iter().chain(&word[..r]).eq(target.iter()))
}

/// Smallest period of a cyclic word.
fn minimal_period(word: &[i8]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&d| n.is_multiple_of(d) && (0..n).all(|i| word[i] == word[(i + d) % n]))
        .unwrap_or(n)
}

/// One layer above `bottom` (one period), starting with `up0`.
fn layer(link: &LocalLink, walks: &FaceWalks, bottom: &[i8], up0: i8) -> Option<(Vec<i8>, Vec<i8>, Vec<i8>)> {
    let p = bottom.len();
    let mut up = vec![up0];
    let mut cross = Vec::with_capacity(p);
    let mut top = Vec::with_capacity(p);
    for a in 0..p {
        // Up triangle (a,0),(a+1,0),(a,1) reads bottom, cross, -up.
        let c = walks.close(-up[a], bottom[a])?;
        let next = departure_germ(bottom[(a + 1) % p]);
        let m = link.midpoint(departure_germ(c), next).filter(|_| link.distance(departure_germ(c), next) == 2)?;
        let u = letter_of_departure(m);
        // Down triangle (a+1,0),(a+1,1),(a,1) reads up, -top, -cross.
        let t = -walks.close(-c, u)?;
        cross.push(c);
        top.push(t);
        up.push(u);
    }
    (up[p] == up[0]).then(|| {
        up.truncate(p);
        (up, cross, top)
    })
}

/// All periodic strips of the given height whose bottom is `word` repeated,
/// with period `word.len() * m` for `m` in `1..=repeats`, each listed with
/// its minimal period.
pub fn label_strips(p: &Presentation, word: &[i8], height: usize, max_period: usize) -> Result<Vec<LabelStrip>, FlatsError> {
    if word.is_empty() || height == 0 {
        return Err(FlatsError::Invalid("strips need a nonempty word and positive height".into()));
    }
    for &s in word {
        if s == 0 || s.unsigned_abs() > 8 {
            return Err(crate::cover::CoverError::Letter(s as i64).into());
        }
    }
    let link = LocalLink::new(p)?;
    if !letters_are_geodesic(&link, word, true) {
        return Err(FlatsError::NotGeodesic(format!("{word:?} repeated")));
    }
    let walks = FaceWalks::new(p);
    let unit = minimal_period(word);
    let base = &word[..unit];
    let mut out = Vec::new();
    let mut period = unit;
    while period <= max_period {
        let bottom: Vec<i8> = base.iter().copied().cycle().take(period).collect();
        let mut partial = vec![LabelStrip {
            period,
            height: 0,
            rows: vec![bottom],
            up: Vec::new(),
            cross: Vec::new(),
        }];
        for _ in 0..height {
            let mut next = Vec::new();
            for s in &partial {
                for up0 in (1..=8).flat_map(|i| [i, -i]) {
                    if let Some((up, cross, top)) = layer(&link, &walks, s.top(), up0) {
                        let mut t = s.clone();
                        t.height += 1;
                        t.rows.push(top);
                        t.up.push(up);
                        t.cross.push(cross);
                        let (from, to) = (-(period as i32), 2 * period as i32);
                        if t.labelling(from, to).check(&walks, &t.triangles(from, to)).is_ok() {
                            next.push(t);
                        }
                    }
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().filter(|s| {
            (1..s.period).all(|d| s.period % d != 0 || !s.has_period(d))
        }));
        period += unit;
    }
    Ok(out)
}

impl LabelStrip {
    fn has_period(&self, d: usize) -> bool {
        let rot = |v: &Vec<i8>| (0..v.len()).all(|i| v[i] == v[(i + d) % v.len()]);
        self.rows.iter().all(rot) && self.up.iter().all(rot) && self.cross.iter().all(rot)
    }
}

/// A strip together with its placement in a ball.
#[derive(Clone, Debug)]
pub struct StripPatch {
    pub strip: LabelStrip,
    pub patch: FlatPatch,
}

/// Strips on the geodesic spelled by `word` from the base of `b`, each
/// placed over one period starting at the base.
pub fn strips_on_geodesic(
    b: &CoverBall,
    p: &Presentation,
    word: &[i8],
    height: usize,
    period_bound: usize,
) -> Result<Vec<StripPatch>, FlatsError> {
    strips_on_geodesic_from(b, p, b.base(), word, height, period_bound)
}

/// As [`strips_on_geodesic`], with the geodesic starting at `start`.
pub fn strips_on_geodesic_from(
    b: &CoverBall,
    p: &Presentation,
    start: usize,
    word: &[i8],
    height: usize,
    period_bound: usize,
) -> Result<Vec<StripPatch>, FlatsError> {
    let strips = label_strips(p, word, height, period_bound)?;
    let mut out = Vec::new();
    for s in strips {
        let need = b.distance(start) + s.period + height;
        if need > b.radius() {
            return Err(FlatsError::BallTooSmall { need, have: b.radius() });
        }
        let columns = s.period as i32;
        let tris = s.triangles(0, columns);
        let patch = FlatPatch::place(b, start, &s.labelling(0, columns), &tris)?;
        out.push(StripPatch { strip: s, patch });
    }
    Ok(out)
}
