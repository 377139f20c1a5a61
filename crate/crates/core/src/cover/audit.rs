//! Combinatorial Gauss–Bonnet for triangulated disks, in units of π/3.
//!
//! A boundary vertex meeting `c` triangles of the disk turns by `3 - c`
//! units and an interior one carries curvature `6 - c`; for a disk the sum
//! is 6.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use super::ball::CoverBall;
use super::CoverError;

/// Shape data of a validated disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskShape {
    pub triangles: usize,
    pub boundary_vertices: usize,
    pub interior_vertices: usize,
}

fn bad(msg: impl Into<String>) -> CoverError {
    CoverError::NotADisk(msg.into())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Triangle counts per vertex and boundary flags, after checking that the
/// triangles form a disk with simple boundary.
fn analyse(b: &CoverBall, disk: &[usize]) -> Result<(BTreeMap<usize, usize>, BTreeSet<usize>), CoverError> {
    if disk.is_empty() {
        return Err(bad("no triangles"));
    }
    let set: BTreeSet<usize> = disk.iter().copied().collect();
    if set.len() != disk.len() {
        return Err(bad("repeated triangle"));
    }
    let tris = b.triangles();
    if let Some(&t) = set.iter().find(|&&t| t >= tris.len()) {
        return Err(bad(format!("triangle {t} is not in the ball")));
    }
    let list: Vec<usize> = set.into_iter().collect();
    let mut on_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut per_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &t) in list.iter().enumerate() {
        for &e in &tris[t].sides {
            on_edge.entry(e).or_default().push(i);
        }
        for &v in &tris[t].vertices {
            per_vertex.entry(v).or_default().push(i);
        }
    }
    if on_edge.values().any(|ts| ts.len() > 2) {
        return Err(bad("an edge meets three triangles of the disk"));
    }
    let chi = per_vertex.len() as i64 - on_edge.len() as i64 + list.len() as i64;
    if chi != 1 {
        return Err(bad(format!("Euler characteristic {chi}")));
    }
    let mut parent: Vec<usize> = (0..list.len()).collect();
    for ts in on_edge.values() {
        if let [a, c] = ts[..] {
            let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
            parent[ra] = rc;
        }
    }
    let root = find(&mut parent, 0);
    if (0..list.len()).any(|i| find(&mut parent, i) != root) {
        return Err(bad("not connected"));
    }
    let edges = b.edges();
    let mut boundary_degree: BTreeMap<usize, usize> = BTreeMap::new();
    let mut boundary_edges = Vec::new();
    for (&e, ts) in &on_edge {
        if ts.len() == 1 {
            boundary_edges.push(e);
            *boundary_degree.entry(edges[e].source).or_default() += 1;
            *boundary_degree.entry(edges[e].target).or_default() += 1;
        }
    }
    if boundary_edges.is_empty() || boundary_degree.values().any(|&d| d != 2) {
        return Err(bad("boundary is not a simple cycle"));
    }
    // One boundary cycle: walk it.
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in &boundary_edges {
        adj.entry(edges[e].source).or_default().push(edges[e].target);
        adj.entry(edges[e].target).or_default().push(edges[e].source);
    }
    let start = edges[boundary_edges[0]].source;
    let (mut prev, mut cur, mut steps) = (start, adj[&start][0], 1);
    while cur != start {
        let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
        prev = cur;
        cur = next;
        steps += 1;
    }
    if steps != boundary_edges.len() {
        return Err(bad("boundary has several components"));
    }
    // Fans: the triangles at each vertex are connected through edges at it.
    for (&v, ts) in &per_vertex {
        let mut parent: Vec<usize> = (0..ts.len()).collect();
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                let shared = tris[list[ts[i]]].sides.iter().any(|e| {
                    tris[list[ts[j]]].sides.contains(e) && (edges[*e].source == v || edges[*e].target == v)
                });
                if shared {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let r = find(&mut parent, 0);
        if (0..ts.len()).any(|i| find(&mut parent, i) != r) {
            return Err(bad(format!("vertex {v} is a pinch point")));
        }
    }
    let counts = per_vertex.into_iter().map(|(v, ts)| (v, ts.len())).collect();
    Ok((counts, boundary_degree.into_keys().collect()))
}

pub fn validate_disk(b: &CoverBall, disk: &[usize]) -> Result<DiskShape, CoverError> {
    let (counts, boundary) = analyse(b, disk)?;
    Ok(DiskShape {
        triangles: disk.len(),
        boundary_vertices: boundary.len(),
        interior_vertices: counts.len() - boundary.len(),
    })
}

/// Boundary turning plus interior curvature, in units of π/3.
pub fn gauss_bonnet_audit(b: &CoverBall, disk: &[usize]) -> Result<i64, CoverError> {
    let (counts, boundary) = analyse(b, disk)?;
    Ok(counts
        .iter()
        .map(|(v, &c)| if boundary.contains(v) { 3 - c as i64 } else { 6 - c as i64 })
        .sum())
}

/// Interior curvature at every interior vertex of a disk, in units of π/3.
pub fn interior_curvatures(b: &CoverBall, disk: &[usize]) -> Result<Vec<(usize, i64)>, CoverError> {
    let (counts, boundary) = analyse(b, disk)?;
    Ok(counts
        .into_iter()
        .filter(|(v, _)| !boundary.contains(v))
        .map(|(v, c)| (v, 6 - c as i64))
        .collect())
}

/// Grows a disk of up to `size` triangles by attaching random neighbours
/// across the boundary, keeping only attachments that leave a disk. All
/// triangles touch only vertices with complete links.
pub fn grow_random_disk<R: Rng>(b: &CoverBall, rng: &mut R, size: usize) -> Vec<usize> {
    let inner = |t: usize| b.triangles()[t].vertices.iter().all(|&v| b.has_complete_link(v));
    let starts: Vec<usize> = (0..b.triangles().len()).filter(|&t| inner(t)).collect();
    if starts.is_empty() {
        return Vec::new();
    }
    let mut disk = vec![starts[rng.gen_range(0..starts.len())]];
    let mut failures = 0;
    while disk.len() < size && failures < 64 {
        let mut candidates: Vec<usize> = disk
            .iter()
            .flat_map(|&t| b.triangles()[t].sides)
            .flat_map(|e| b.triangles_on_edge(e).iter().copied())
            .filter(|&t| inner(t) && !disk.contains(&t))
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        if candidates.is_empty() {
            break;
        }
        let t = candidates[rng.gen_range(0..candidates.len())];
        disk.push(t);
        if analyse(b, &disk).is_err() {
            disk.pop();
            failures += 1;
        }
    }
    disk
}
