//! Isomorphism of presentations and the exhaustive classification search.
//!
//! Two presentations are isomorphic when one is obtained from the other by
//! renaming letters, rotating letters inside a face, and reordering faces.
//! Reading a face backwards is not allowed. The canonical key is the least
//! sorted list of rotation-normalized faces over all 8! renamings.
//!
//! The search fills faces slot by slot in the order of that canonical key:
//! faces sorted, each starting at its least letter, and letters introduced
//! in increasing order. Each complex has a canonical key of this shape, so
//! the search reaches every class. A link edge is only added between germs
//! at distance at least 5, which rules out 2-, 3- and 4-cycles as early as
//! possible.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::link::{arrival_germ, departure_germ, is_rank74, LINK_VERTICES};
use super::{Face, Presentation, TypeTag, LETTERS};

/// Total order on signed letters: `1 < -1 < 2 < -2 < ...`.
fn key(s: i8) -> u8 {
    2 * s.unsigned_abs() + u8::from(s < 0)
}

fn normalized(f: Face) -> [u8; 3] {
    let k = [key(f[0]), key(f[1]), key(f[2])];
    let r1 = [k[1], k[2], k[0]];
    let r2 = [k[2], k[0], k[1]];
    k.min(r1).min(r2)
}

fn unkey(k: u8) -> i8 {
    let a = (k / 2) as i8;
    if k % 2 == 1 {
        -a
    } else {
        a
    }
}

fn permutations() -> &'static [[u8; LETTERS + 1]] {
    static PERMS: OnceLock<Vec<[u8; LETTERS + 1]>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = Vec::with_capacity(40320);
        let mut p: Vec<u8> = (1..=LETTERS as u8).collect();
        heap_permute(&mut p, LETTERS, &mut out);
        out
    })
}

fn heap_permute(p: &mut Vec<u8>, k: usize, out: &mut Vec<[u8; LETTERS + 1]>) {
    if k == 1 {
        let mut m = [0u8; LETTERS + 1];
        for (i, &v) in p.iter().enumerate() {
            m[i + 1] = v;
        }
        out.push(m);
        return;
    }
    for i in 0..k {
        heap_permute(p, k - 1, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

/// Canonical sorted list of normalized faces, in key encoding.
fn canonical_key(p: &Presentation) -> Vec<[u8; 3]> {
    let faces = p.faces();
    let mut best: Option<Vec<[u8; 3]>> = None;
    let mut buf = Vec::with_capacity(faces.len());
    for sigma in permutations() {
        buf.clear();
        for f in faces {
            let g = f.map(|s| {
                let a = sigma[s.unsigned_abs() as usize] as i8;
                if s < 0 {
                    -a
                } else {
                    a
                }
            });
            buf.push(normalized(g));
        }
        buf.sort_unstable();
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

/// The canonical representative of the isomorphism class of `p`.
pub fn canonical_presentation(p: &Presentation) -> Presentation {
    let faces = canonical_key(p)
        .into_iter()
        .map(|k| k.map(unkey))
        .collect();
    Presentation::new(faces).expect("renaming preserves validity")
}

pub fn presentations_isomorphic(p: &Presentation, q: &Presentation) -> bool {
    canonical_key(p) == canonical_key(q)
}

/// One isomorphism class found by the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexClass {
    #[serde(serialize_with = "ser_presentation")]
    pub canonical: Presentation,
    pub type_tag: TypeTag,
    pub orientable: bool,
    /// Index, in the same list, of the class of the mirror image (every face
    /// read backwards), when that class is in the list.
    pub mirror_class: Option<usize>,
}

fn ser_presentation<S: serde::Serializer>(p: &Presentation, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.faces().len()))?;
    for f in p.faces() {
        seq.serialize_element(f)?;
    }
    seq.end()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SearchMode {
    /// One orderly search over canonical-shaped presentations.
    Full,
    /// The six hand-split subcases, each filled from the remaining letters.
    SixCases,
}

/// Incremental link: adjacency lists over the 16 germs.
#[derive(Clone)]
struct Link {
    adj: [Vec<u8>; LINK_VERTICES],
}

impl Link {
    fn new() -> Self {
        Link {
            adj: Default::default(),
        }
    }

    /// Whether `b` is within distance 4 of `a` (or equal to it).
    fn near(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let mut dist = [u8::MAX; LINK_VERTICES];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == 4 {
                continue;
            }
            for &y in &self.adj[x] {
                let y = y as usize;
                if dist[y] == u8::MAX {
                    if y == b {
                        return true;
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// Adds the three corner edges of a face; returns how many were added
    /// before a violation, and whether all three went in.
    fn add_face(&mut self, f: Face) -> (usize, bool) {
        for slot in 0..3 {
            let a = departure_germ(f[slot]);
            let b = arrival_germ(f[(slot + 1) % 3]);
            if self.adj[a].len() >= 3 || self.adj[b].len() >= 3 || self.near(a, b) {
                return (slot, false);
            }
            self.adj[a].push(b as u8);
            self.adj[b].push(a as u8);
        }
        (3, true)
    }

    fn remove_face(&mut self, f: Face, added: usize) {
        for slot in (0..added).rev() {
            let a = departure_germ(f[slot]);
            let b = arrival_germ(f[(slot + 1) % 3]);
            self.adj[a].pop();
            self.adj[b].pop();
        }
    }
}

/// Mutable state of the slot-filling search.
#[derive(Clone)]
struct Filler {
    slots: [i8; 24],
    /// Prescribed slot values (0 = free), used by the six-case mode.
    fixed: [i8; 24],
    count: [u8; LETTERS + 1],
    link: Link,
    signed: bool,
    orderly: bool,
    /// Letters up to this bound may be used freely; above it they must be
    /// introduced in increasing order.
    free_letters: u8,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Filler {
    fn new(fixed: [i8; 24], signed: bool, orderly: bool, budget: u64) -> Self {
        let free_letters = fixed.iter().map(|s| s.unsigned_abs()).max().unwrap_or(0);
        // Prescribed letters are counted from the start.
        let mut count = [0u8; LETTERS + 1];
        for s in fixed.iter().filter(|&&s| s != 0) {
            count[s.unsigned_abs() as usize] += 1;
        }
        Filler {
            slots: [0; 24],
            fixed,
            count,
            link: Link::new(),
            signed,
            orderly,
            free_letters,
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn max_used(&self, pos: usize) -> u8 {
        self.slots[..pos]
            .iter()
            .map(|s| s.unsigned_abs())
            .max()
            .unwrap_or(0)
            .max(self.free_letters)
    }

    fn candidates(&self, pos: usize) -> Vec<i8> {
        if self.fixed[pos] != 0 {
            return vec![self.fixed[pos]];
        }
        let top = (self.max_used(pos) + 1).min(LETTERS as u8);
        let mut out = Vec::new();
        for a in 1..=top {
            if self.count[a as usize] >= 3 {
                continue;
            }
            out.push(a as i8);
            if self.signed {
                out.push(-(a as i8));
            }
        }
        if self.orderly {
            let j = pos % 3;
            let first = pos - j;
            out.retain(|&v| match j {
                0 => first == 0 || key(v) >= key(self.slots[first - 3]),
                1 => key(v) >= key(self.slots[first]),
                _ => key(v) > key(self.slots[first]),
            });
        }
        out
    }

    fn run(&mut self, pos: usize, found: &mut BTreeSet<Vec<[u8; 3]>>) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if pos == 24 {
            let faces: Vec<Face> = self.slots.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
            if let Ok(p) = Presentation::new(faces) {
                if is_rank74(&p) {
                    found.insert(canonical_key(&p));
                }
            }
            return;
        }
        let free = self.fixed[pos] == 0;
        for v in self.candidates(pos) {
            self.slots[pos] = v;
            if free {
                self.count[v.unsigned_abs() as usize] += 1;
            }
            if pos % 3 == 2 {
                let f = [self.slots[pos - 2], self.slots[pos - 1], v];
                let sorted_ok = !self.orderly
                    || pos < 5
                    || normalized(f) >= normalized([self.slots[pos - 5], self.slots[pos - 4], self.slots[pos - 3]]);
                if sorted_ok {
                    let (added, ok) = self.link.add_face(f);
                    if ok {
                        self.run(pos + 1, found);
                    }
                    self.link.remove_face(f, added);
                }
            } else {
                self.run(pos + 1, found);
            }
            if free {
                self.count[v.unsigned_abs() as usize] -= 1;
            }
            self.slots[pos] = 0;
        }
    }
}

/// Builds the class list: sorted by type tag then canonical faces, with
/// mirror images cross-referenced.
fn finish(keys: BTreeSet<Vec<[u8; 3]>>) -> Vec<ComplexClass> {
    let mut classes: Vec<ComplexClass> = keys
        .into_iter()
        .map(|k| {
            let p = Presentation::new(k.into_iter().map(|f| f.map(unkey)).collect())
                .expect("canonical faces are valid");
            ComplexClass {
                type_tag: p.type_tag(),
                orientable: p.is_orientable(),
                canonical: p,
                mirror_class: None,
            }
        })
        .collect();
    classes.sort_by(|a, b| (a.type_tag, &a.canonical).cmp(&(b.type_tag, &b.canonical)));
    let index: BTreeMap<Presentation, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.canonical.clone(), i))
        .collect();
    let mirrors: Vec<Option<usize>> = classes
        .par_iter()
        .map(|c| index.get(&canonical_presentation(&c.canonical.mirror())).copied())
        .collect();
    for (c, m) in classes.iter_mut().zip(mirrors) {
        c.mirror_class = m;
    }
    classes
}

/// Every orientable one-vertex complex whose link is ample, one per class.
pub fn classify_orientable(mode: SearchMode) -> Vec<ComplexClass> {
    match mode {
        SearchMode::Full => classify_full(),
        SearchMode::SixCases => classify_six_cases(&[0, 1, 2, 3, 4, 5]),
    }
}

fn classify_full() -> Vec<ComplexClass> {
    // Split on the second face; the first face always starts with letter 1.
    let root = Filler::new([0; 24], false, true, u64::MAX);
    let mut branches = Vec::new();
    expand(root, 0, 6, &mut branches);
    let found = branches
        .into_par_iter()
        .map(|(mut f, pos)| {
            let mut local = BTreeSet::new();
            f.run(pos, &mut local);
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    finish(found)
}

/// Enumerates partial fillings up to slot `depth` to seed parallel work.
fn expand(f: Filler, pos: usize, depth: usize, out: &mut Vec<(Filler, usize)>) {
    if pos == depth {
        out.push((f, pos));
        return;
    }
    for v in f.candidates(pos) {
        let mut g = f.clone();
        g.slots[pos] = v;
        g.count[v.unsigned_abs() as usize] += 1;
        if pos % 3 == 2 {
            let face = [g.slots[pos - 2], g.slots[pos - 1], v];
            if pos >= 5
                && normalized(face) < normalized([g.slots[pos - 5], g.slots[pos - 4], g.slots[pos - 3]])
            {
                continue;
            }
            if !g.link.add_face(face).1 {
                continue;
            }
        }
        expand(g, pos + 1, depth, out);
    }
}

/// Templates of the six subcases; 0 marks a free slot.
pub const SIX_CASES: [[[i8; 3]; 8]; 6] = [
    [[1, 2, 3], [4, 4, 5], [1, 0, 0], [2, 0, 0], [3, 0, 0], [1, 0, 0], [2, 0, 0], [3, 0, 0]],
    [[1, 2, 3], [4, 5, 6], [1, 0, 0], [2, 0, 0], [3, 0, 0], [1, 0, 0], [2, 0, 0], [3, 0, 0]],
    [[1, 2, 3], [1, 3, 2], [1, 4, 0], [2, 0, 0], [3, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]],
    [[1, 2, 3], [1, 3, 4], [3, 5, 0], [1, 0, 0], [2, 0, 0], [2, 0, 0], [0, 0, 0], [0, 0, 0]],
    [[1, 2, 3], [1, 3, 4], [3, 5, 0], [2, 1, 0], [2, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]],
    [[1, 2, 3], [1, 3, 4], [2, 1, 0], [3, 2, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]],
];

/// Runs the six subcases in the given order and merges the results.
pub fn classify_six_cases(order: &[usize]) -> Vec<ComplexClass> {
    let found = order
        .par_iter()
        .map(|&c| {
            let mut fixed = [0i8; 24];
            for (i, f) in SIX_CASES[c].iter().enumerate() {
                fixed[3 * i..3 * i + 3].copy_from_slice(f);
            }
            let mut filler = Filler::new(fixed, false, false, u64::MAX);
            let mut local = BTreeSet::new();
            filler.run(0, &mut local);
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    finish(found)
}

/// Result of the signed (possibly non-orientable) search.
#[derive(Clone, Debug, Serialize)]
pub struct SignedSearchReport {
    pub classes: Vec<ComplexClass>,
    pub nodes: u64,
    /// False when the node budget ran out before the search finished.
    pub complete: bool,
}

/// Search over signed presentations, up to renaming, rotation and face
/// order. Reversing a single loop is not quotiented, so one complex may show
/// up under several sign patterns.
pub fn classify_signed(budget: u64) -> SignedSearchReport {
    let mut filler = Filler::new([0; 24], true, true, budget);
    let mut found = BTreeSet::new();
    filler.run(0, &mut found);
    SignedSearchReport {
        classes: finish(found),
        nodes: filler.nodes.min(budget),
        complete: !filler.exhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_table_is_complete() {
        let perms = permutations();
        assert_eq!(perms.len(), 40320);
        let distinct: BTreeSet<_> = perms.iter().collect();
        assert_eq!(distinct.len(), 40320);
    }

    #[test]
    fn normalization_picks_least_rotation() {
        assert_eq!(normalized([2, 1, 1]), [2, 2, 4]);
        assert_eq!(normalized([3, 1, 2]), [2, 4, 6]);
        assert_eq!(normalized([1, -1, 2]), [2, 3, 4]);
    }

    #[test]
    fn key_round_trip() {
        for s in [1i8, -1, 5, -8] {
            assert_eq!(unkey(key(s)), s);
        }
    }
}
