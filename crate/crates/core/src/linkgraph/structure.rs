//! Distance-3 pair types, 6-cycles and the automorphism action on tripods.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{automorphisms, GraphError, LinkGraph};

/// Type of a pair of vertices at distance 3, by the number of length-3 paths
/// joining them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PairType {
    /// Exactly two paths.
    Type32,
    /// Exactly three paths.
    Type2,
}

/// Number of simple paths `a - x - y - b`.
pub fn count_paths_of_length3(g: &LinkGraph, a: usize, b: usize) -> usize {
    let mut count = 0;
    for &x in g.neighbors(a) {
        if x == b {
            continue;
        }
        for &y in g.neighbors(x) {
            if y != a && y != b && g.has_edge(y, b) {
                count += 1;
            }
        }
    }
    count
}

pub fn pair_type(g: &LinkGraph, a: usize, b: usize) -> Result<PairType, GraphError> {
    let n = g.n();
    if a >= n || b >= n {
        return Err(GraphError::VertexOutOfRange(a.max(b), n));
    }
    let d = g.distances_from(a)[b];
    if d != 3 {
        return Err(GraphError::NotAtDistanceThree(a, b, d));
    }
    match count_paths_of_length3(g, a, b) {
        2 => Ok(PairType::Type32),
        3 => Ok(PairType::Type2),
        c => Err(GraphError::UnexpectedPathCount(a, b, c)),
    }
}

/// Simple 6-cycles, each listed once: it starts at its least vertex and its
/// second vertex is smaller than its last.
pub fn six_cycles(g: &LinkGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(6);
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        extend(g, s, &mut path, &mut out);
    }
    out
}

fn extend(g: &LinkGraph, s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    if path.len() == 6 {
        if g.has_edge(last, s) && path[1] < path[5] {
            out.push(path.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > s && !path.contains(&w) {
            path.push(w);
            extend(g, s, path, out);
            path.pop();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixCycleReport {
    pub cycle: Vec<usize>,
    /// The antipodal pairs `(c[i], c[i+3])` for `i = 0, 1, 2`.
    pub pairs: [(usize, usize); 3],
    /// Number of length-3 paths joining each antipodal pair.
    pub path_counts: [usize; 3],
}

impl SixCycleReport {
    pub fn count(&self, t: PairType) -> usize {
        let want = match t {
            PairType::Type32 => 2,
            PairType::Type2 => 3,
        };
        self.path_counts.iter().filter(|&&c| c == want).count()
    }
}

pub fn six_cycle_analysis(g: &LinkGraph) -> Vec<SixCycleReport> {
    six_cycles(g)
        .into_iter()
        .map(|c| {
            let pairs = [(c[0], c[3]), (c[1], c[4]), (c[2], c[5])];
            let path_counts = pairs.map(|(a, b)| count_paths_of_length3(g, a, b));
            SixCycleReport {
                cycle: c,
                pairs,
                path_counts,
            }
        })
        .collect()
}

/// Order of `Aut(g)` and how it acts on tripods (closed vertex stars).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismReport {
    pub order: usize,
    pub vertex_transitive: bool,
    pub tripod_transitive: bool,
    /// Order of the setwise stabilizer of the tripod at vertex 0.
    pub tripod_stabilizer_order: usize,
    /// Whether only the identity fixes every vertex of that tripod.
    pub pointwise_stabilizer_trivial: bool,
    /// Orbit size of the ordered tripod `(0, n1, n2, n3)`.
    pub ordered_tripod_orbit: usize,
}

pub fn automorphism_group_order(g: &LinkGraph) -> Result<AutomorphismReport, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    let auts = automorphisms(g);
    let tripod = |v: usize| -> BTreeSet<usize> {
        std::iter::once(v).chain(g.neighbors(v).iter().copied()).collect()
    };
    let all_tripods: BTreeSet<BTreeSet<usize>> = (0..g.n()).map(tripod).collect();
    let t0 = tripod(0);
    let image = |a: &Vec<usize>| -> BTreeSet<usize> { t0.iter().map(|&v| a[v]).collect() };
    let orbit: BTreeSet<BTreeSet<usize>> = auts.iter().map(image).collect();
    let vertex_orbit: BTreeSet<usize> = auts.iter().map(|a| a[0]).collect();
    let ordered: Vec<usize> = std::iter::once(0).chain(g.neighbors(0).iter().copied()).collect();
    let ordered_orbit: BTreeSet<Vec<usize>> = auts
        .iter()
        .map(|a| ordered.iter().map(|&v| a[v]).collect())
        .collect();
    Ok(AutomorphismReport {
        order: auts.len(),
        vertex_transitive: vertex_orbit.len() == g.n(),
        tripod_transitive: orbit.len() == all_tripods.len(),
        tripod_stabilizer_order: auts.iter().filter(|a| image(a) == t0).count(),
        pointwise_stabilizer_trivial: auts
            .iter()
            .filter(|a| t0.iter().all(|&v| a[v] == v))
            .count()
            == 1,
        ordered_tripod_orbit: ordered_orbit.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkgraph::named;

    #[test]
    fn single_vertex_has_trivial_group() {
        let g = LinkGraph::empty(1);
        let r = automorphism_group_order(&g).unwrap();
        assert_eq!(r.order, 1);
        assert!(r.tripod_transitive);
    }

    #[test]
    fn pair_type_rejects_wrong_distance() {
        let g = named::l74();
        let nb = g.neighbors(0)[0];
        assert!(matches!(
            pair_type(&g, 0, nb),
            Err(GraphError::NotAtDistanceThree(_, _, 1))
        ));
    }

    #[test]
    fn hexagon_has_one_six_cycle() {
        let c = six_cycles(&named::cycle(6));
        assert_eq!(c, vec![vec![0, 1, 2, 3, 4, 5]]);
    }
}
