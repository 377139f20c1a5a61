//! Property tests for the exact algebra, graph canonisation and cover
//! development.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use polyrank_core::complexes::presets::PRESETS;
use polyrank_core::cover::*;
use polyrank_core::homology::{is_unimodular, smith_normal_form, IntMatrix};
use polyrank_core::linkgraph::{canonical_form, isomorphic, named};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(n: usize, m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, m), n)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn diag(d: &[BigInt], rows: usize, cols: usize) -> IntMatrix {
    let mut out = IntMatrix::zeros(rows, cols);
    for (i, x) in d.iter().enumerate() {
        out.set(i, i, x.clone());
    }
    out
}

fn word() -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec((1i8..=8, any::<bool>()).prop_map(|(a, s)| if s { -a } else { a }), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_is_a_unimodular_diagonalisation(rows in matrix(8, 8)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&m);
        prop_assert!(is_unimodular(&s.left));
        prop_assert!(is_unimodular(&s.right));
        let d = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        prop_assert_eq!(d, diag(&s.diagonal, 8, 8));
        let nz: Vec<&BigInt> = s.diagonal.iter().filter(|x| !x.is_zero()).collect();
        prop_assert!(s.diagonal[..nz.len()].iter().all(|x| x.is_positive()));
        prop_assert!(nz.windows(2).all(|p| (p[1] % p[0]).is_zero()));
    }

    #[test]
    fn snf_of_rectangular_matrices(rows in matrix(5, 9)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&m);
        let d = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        prop_assert_eq!(d, diag(&s.diagonal, 5, 9));
    }

    #[test]
    fn snf_ignores_row_and_column_order(
        rows in matrix(6, 6), rp in permutation(6), cp in permutation(6),
    ) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let a = smith_normal_form(&m).diagonal;
        let b = smith_normal_form(&m.permute(&rp, &cp)).diagonal;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn snf_of_a_unimodular_product_is_trivial(
        ops in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..20),
    ) {
        // Build a unimodular matrix from elementary row operations.
        let mut rows: Vec<Vec<i64>> =
            (0..5).map(|i| (0..5).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, q) in ops {
            if i != j {
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(src) {
                    *x += q * y;
                }
            }
        }
        let m = IntMatrix::from_rows(&rows).unwrap();
        prop_assert!(is_unimodular(&m));
        prop_assert!(smith_normal_form(&m).diagonal.iter().all(|d| d.is_one()));
    }

    #[test]
    fn canonical_form_is_relabelling_invariant(perm in permutation(16)) {
        let g = named::l74();
        let h = g.relabel(&perm);
        let (cg, ch) = (canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(&cg.graph, &ch.graph);
        prop_assert_eq!(g.relabel(&cg.relabel), cg.graph);
        prop_assert!(isomorphic(&g, &h));
    }

    #[test]
    fn heawood_is_never_the_link(perm in permutation(14)) {
        let h = named::heawood().relabel(&perm);
        prop_assert!(isomorphic(&named::heawood(), &h));
        prop_assert!(!isomorphic(&named::generalized_petersen(7, 2), &h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn development_is_deterministic_and_monotone(class in 0usize..12, r in 0usize..4) {
        let p = PRESETS[class].presentation();
        let a = develop_ball(&p, r, DEFAULT_VERTEX_BUDGET).unwrap();
        let b = develop_ball(&p, r, DEFAULT_VERTEX_BUDGET).unwrap();
        prop_assert_eq!(a.stats(), b.stats());
        let big = develop_ball(&p, r + 1, DEFAULT_VERTEX_BUDGET).unwrap();
        prop_assert_eq!(&big.sphere_sizes()[..=r], a.sphere_sizes());
        prop_assert!(big.triangles().len() >= a.triangles().len());
    }

    #[test]
    fn random_disks_satisfy_gauss_bonnet(class in 0usize..12, seed in any::<u64>(), size in 1usize..40) {
        let p = PRESETS[class].presentation();
        let b = develop_ball(&p, 3, DEFAULT_VERTEX_BUDGET).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let disk = grow_random_disk(&b, &mut rng, size);
        prop_assert!(!disk.is_empty());
        prop_assert_eq!(gauss_bonnet_audit(&b, &disk).unwrap(), 6);
        prop_assert!(interior_curvatures(&b, &disk).unwrap().iter().all(|&(_, k)| k <= 0));
    }

    #[test]
    fn tracing_respects_concatenation_and_inverses(class in 0usize..12, x in word(), y in word()) {
        let p = PRESETS[class].presentation();
        let b = develop_ball(&p, 4, DEFAULT_VERTEX_BUDGET).unwrap();
        let xy = b.trace(&[x.clone(), y.clone()].concat());
        let mid = b.trace(&x).unwrap();
        let from_mid = b.trace_from(mid, &y);
        prop_assert_eq!(xy, from_mid);
        prop_assert_eq!(b.trace(&[x.clone(), inverse(&x)].concat()), Some(0));
        let mut d = Developer::new(&p, DEFAULT_VERTEX_BUDGET).unwrap();
        prop_assert!(d.is_trivial(&[x.clone(), y.clone(), inverse(&y), inverse(&x)].concat()).unwrap());
    }

    #[test]
    fn subwords_of_geodesics_are_geodesic(start in 0usize..6, len in 1usize..5, a in 0usize..4, b in 0usize..4) {
        let g = [2i8, 7, 1, 8, 3, 4];
        let p = PRESETS[1].presentation();
        let ball = develop_ball(&p, 4, DEFAULT_VERTEX_BUDGET).unwrap();
        let letters: Vec<i8> = (0..len).map(|i| g[(start + i) % 6]).collect();
        let path = Path { start: 0, letters: letters.clone() };
        prop_assert!(ball.is_geodesic(&path).unwrap());
        prop_assert_eq!(ball.distance(ball.trace(&letters).unwrap()), len);
        let (lo, hi) = (a.min(b).min(len), a.max(b).min(len));
        let sub = Path { start: 0, letters: letters[lo..hi].to_vec() };
        prop_assert!(ball.is_geodesic(&sub).unwrap());
    }
}
