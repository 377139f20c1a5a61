//! The triangulated Euclidean plane.
//!
//! Vertex `(a, b)` sits at `a·e1 + b·e2` with `e1 = (1, 0)` and
//! `e2 = (1/2, √3/2)`. The up triangle at `(a, b)` has vertices `(a, b)`,
//! `(a+1, b)`, `(a, b+1)`; the down triangle has `(a+1, b)`, `(a+1, b+1)`,
//! `(a, b+1)`. Distances are compared exactly through squared values.

use serde::Serialize;

pub type ModelVertex = (i32, i32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ModelTriangle {
    pub a: i32,
    pub b: i32,
    pub up: bool,
}

impl ModelTriangle {
    /// Vertices in counterclockwise order.
    pub fn vertices(&self) -> [ModelVertex; 3] {
        let (a, b) = (self.a, self.b);
        if self.up {
            [(a, b), (a + 1, b), (a, b + 1)]
        } else {
            [(a + 1, b), (a + 1, b + 1), (a, b + 1)]
        }
    }

    /// The triangle with the given vertex set, if it is one.
    pub fn from_vertices(vs: [ModelVertex; 3]) -> Option<ModelTriangle> {
        let mut s = vs;
        s.sort_unstable();
        let [p, q, r] = s;
        // Sorted: up = (a,b),(a,b+1),(a+1,b); down = (a,b+1),(a+1,b),(a+1,b+1).
        if q == (p.0, p.1 + 1) && r == (p.0 + 1, p.1) {
            return Some(ModelTriangle { a: p.0, b: p.1, up: true });
        }
        if p == (q.0 - 1, q.1 + 1) && r == (q.0, q.1 + 1) {
            return Some(ModelTriangle { a: q.0 - 1, b: q.1, up: false });
        }
        None
    }
}

/// `|v|²` for a lattice vector.
pub fn norm2(v: ModelVertex) -> i64 {
    let (a, b) = (v.0 as i64, v.1 as i64);
    a * a + a * b + b * b
}

/// Simplicial distance from the origin: `max(|a|, |b|, |a + b|)`.
pub fn hex_distance(v: ModelVertex) -> i32 {
    v.0.abs().max(v.1.abs()).max((v.0 + v.1).abs())
}

/// Scaled coordinates `(2a + b, b)`: Euclidean `(X/2, Y·√3/2)`.
fn scaled(v: ModelVertex) -> (i64, i64) {
    (2 * v.0 as i64 + v.1 as i64, v.1 as i64)
}

/// `16 · d²` where `d` is the distance from `p` to the closed triangle.
pub fn dist2_to_triangle_x16(p: ModelVertex, t: &ModelTriangle) -> i64 {
    let vs = t.vertices().map(scaled);
    let pp = scaled(p);
    // Inside test with the √3 factor on Y dropped (a positive scale).
    let cross = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    let signs = [cross(vs[0], vs[1], pp), cross(vs[1], vs[2], pp), cross(vs[2], vs[0], pp)];
    if signs.iter().all(|&s| s >= 0) || signs.iter().all(|&s| s <= 0) {
        return 0;
    }
    let mut best = i64::MAX;
    for i in 0..3 {
        let (a, b) = (vs[i], vs[(i + 1) % 3]);
        let (dx, dy) = (pp.0 - a.0, pp.1 - a.1);
        let (ex, ey) = (b.0 - a.0, b.1 - a.1);
        // 4|P-A|² and 4(P-A)·(B-A); |B-A| = 1.
        let q = dx * dx + 3 * dy * dy;
        let s = dx * ex + 3 * dy * ey;
        let d16 = if s <= 0 {
            4 * q
        } else if s >= 4 {
            let (fx, fy) = (pp.0 - b.0, pp.1 - b.1);
            4 * (fx * fx + 3 * fy * fy)
        } else {
            4 * q - s * s
        };
        best = best.min(d16);
    }
    best
}

/// Grid radius `m·√3/6`.
pub fn grid_radius(m: u32) -> f64 {
    m as f64 * 3f64.sqrt() / 6.0
}

/// Triangles whose interiors meet the open disk of radius `m·√3/6` about
/// the origin.
pub fn disk_support(m: u32) -> Vec<ModelTriangle> {
    disk_support_sq(m as u64 * m as u64, 12)
}

/// Triangles whose interiors meet the open disk of squared radius
/// `num / den` about the origin.
pub fn disk_support_sq(num: u64, den: u64) -> Vec<ModelTriangle> {
    // d² < num/den  <=>  den · 16d² < 16 num
    let reach = ((num as f64 / den as f64).sqrt() * 2.0 / 3f64.sqrt()).ceil() as i32 + 2;
    let mut out = Vec::new();
    for a in -2 * reach..=2 * reach {
        for b in -2 * reach..=2 * reach {
            for up in [true, false] {
                let t = ModelTriangle { a, b, up };
                if (den as i128) * (dist2_to_triangle_x16((0, 0), &t) as i128) < 16 * num as i128 {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Triangles of the regular hexagon of simplicial radius `n` about the
/// origin.
pub fn hexagon(n: i32) -> Vec<ModelTriangle> {
    let mut out = Vec::new();
    for a in -n - 1..=n {
        for b in -n - 1..=n {
            for up in [true, false] {
                let t = ModelTriangle { a, b, up };
                if t.vertices().iter().all(|&v| hex_distance(v) <= n) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// Triangles of the equilateral triangle with corners `(0,0)`, `(r,0)`,
/// `(0,r)`.
pub fn equilateral(r: i32) -> Vec<ModelTriangle> {
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r - a {
            out.push(ModelTriangle { a, b, up: true });
            if a + b + 2 <= r {
                out.push(ModelTriangle { a, b, up: false });
            }
        }
    }
    out.sort();
    out
}

/// The twelve lattice isometries fixing the origin.
pub fn symmetries() -> Vec<fn(ModelVertex) -> ModelVertex> {
    fn r0(v: ModelVertex) -> ModelVertex {
        v
    }
    fn r1(v: ModelVertex) -> ModelVertex {
        (-v.1, v.0 + v.1)
    }
    fn r2(v: ModelVertex) -> ModelVertex {
        r1(r1(v))
    }
    fn r3(v: ModelVertex) -> ModelVertex {
        (-v.0, -v.1)
    }
    fn r4(v: ModelVertex) -> ModelVertex {
        r3(r1(v))
    }
    fn r5(v: ModelVertex) -> ModelVertex {
        r3(r2(v))
    }
    fn m0(v: ModelVertex) -> ModelVertex {
        (v.1, v.0)
    }
    fn m1(v: ModelVertex) -> ModelVertex {
        m0(r1(v))
    }
    fn m2(v: ModelVertex) -> ModelVertex {
        m0(r2(v))
    }
    fn m3(v: ModelVertex) -> ModelVertex {
        m0(r3(v))
    }
    fn m4(v: ModelVertex) -> ModelVertex {
        m0(r4(v))
    }
    fn m5(v: ModelVertex) -> ModelVertex {
        m0(r5(v))
    }
    vec![r0, r1, r2, r3, r4, r5, m0, m1, m2, m3, m4, m5]
}

/// Image of a triangle under a vertex map that is a lattice isometry.
pub fn map_triangle(t: &ModelTriangle, f: fn(ModelVertex) -> ModelVertex) -> ModelTriangle {
    ModelTriangle::from_vertices(t.vertices().map(f)).expect("isometries preserve triangles")
}
