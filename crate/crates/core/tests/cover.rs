//! Cover development, tracing, geodesics, rings and Gauss–Bonnet audits.

use polyrank_core::complexes::presets::{orientable_presets, preset, PRESETS};
use polyrank_core::complexes::Presentation;
use polyrank_core::cover::*;

fn rows(name: &str) -> Presentation {
    preset(name).unwrap().presentation()
}

fn w(text: &str) -> Vec<i8> {
    parse_word(text).unwrap()
}

#[test]
fn ball_of_radius_zero_and_one() {
    let p = rows("V0_1");
    let b0 = develop_ball(&p, 0, DEFAULT_VERTEX_BUDGET).unwrap();
    assert_eq!((b0.vertex_count(), b0.edges().len(), b0.triangles().len()), (1, 0, 0));
    let b1 = develop_ball(&p, 1, DEFAULT_VERTEX_BUDGET).unwrap();
    assert_eq!(b1.vertex_count(), 17);
    assert_eq!(b1.sphere_sizes(), &[1, 16]);
    // 16 edges at the base, 24 triangles at the base.
    assert_eq!(b1.triangles_at(0).len(), 24);
    assert_eq!(b1.triangles().len(), 24);
    assert!((0..16).all(|g| b1.neighbor(0, g).is_some()));
}

#[test]
fn invariants_hold_for_every_class() {
    for pr in PRESETS.iter() {
        let p = pr.presentation();
        let b = develop_ball(&p, 3, DEFAULT_VERTEX_BUDGET).unwrap();
        b.check_invariants(&p).unwrap_or_else(|e| panic!("{}: {e}", pr.name));
        assert_eq!(b.sphere_sizes(), &[1, 16, 144, 1152], "{}", pr.name);
    }
}

#[test]
fn sphere_sizes_at_radius_five() {
    // Regression constants, identical for every class.
    let p = rows("V0_1");
    let b = develop_ball(&p, 5, DEFAULT_VERTEX_BUDGET).unwrap();
    let s = b.stats();
    assert_eq!(s.sphere_sizes, vec![1, 16, 144, 1152, 8928, 68544]);
    assert_eq!(s.triangles, 170952);
    b.check_invariants(&p).unwrap();
}

#[test]
fn budget_is_enforced() {
    let p = rows("V0");
    assert_eq!(develop_ball(&p, 3, 100).unwrap_err(), CoverError::Budget(100));
}

#[test]
fn strip_identities_hold_in_v01() {
    let mut d = Developer::new(&rows("V0_1"), DEFAULT_VERTEX_BUDGET).unwrap();
    for rel in ["1 5 -1 -6", "2 5 -2 -6", "3 5 -3 -6", "5 4 -6 -4", "5 8 -6 -8", "5 7 -6 -7"] {
        assert!(d.is_trivial(&w(rel)).unwrap(), "{rel}");
    }
    for x in ["1 8", "2 7", "3 4"] {
        assert!(d.is_trivial(&commutator(&w(x), &[6])).unwrap(), "[{x}, 6]");
    }
    assert!(d.is_trivial(&w("6 1 -5 -1")).unwrap());
    assert!(!d.is_trivial(&w("1")).unwrap());
    assert!(!d.is_trivial(&w("1 5 -1 -5")).unwrap());
}

#[test]
fn the_stated_w_h_identity_does_not_hold() {
    // See the decisions ledger: neither a5a8 nor a5a6 commutes with w_g
    // after cubing.
    let mut d = Developer::new(&rows("V0_1"), DEFAULT_VERTEX_BUDGET).unwrap();
    let wg = w("2 7 1 8 3 4");
    for wh in ["5 8", "5 6"] {
        let rel = commutator(&power(&w(wh), 3), &wg);
        assert!(!d.is_trivial(&rel).unwrap(), "{wh}");
    }
}

#[test]
fn commuting_pair_in_v02() {
    let mut d = Developer::new(&rows("V0_2"), DEFAULT_VERTEX_BUDGET).unwrap();
    assert!(d.is_trivial(&commutator(&w("1 1 1"), &w("3 4"))).unwrap());
    assert!(!d.is_trivial(&commutator(&w("1"), &w("3 4"))).unwrap());
}

#[test]
fn lazy_and_ball_tracing_agree() {
    let p = rows("V0_1");
    let b = develop_ball(&p, 4, DEFAULT_VERTEX_BUDGET).unwrap();
    let mut d = Developer::new(&p, DEFAULT_VERTEX_BUDGET).unwrap();
    for (x, y) in [("1 5", "6 1"), ("1 2", "2 1"), ("5 4", "4 6"), ("1 -1 2", "2")] {
        let same_ball = b.trace(&w(x)) == b.trace(&w(y));
        let same_lazy = d.is_trivial(&[w(x), inverse(&w(y))].concat()).unwrap();
        assert_eq!(same_ball, same_lazy, "{x} vs {y}");
    }
}

#[test]
fn geodesic_tests() {
    let p = rows("V0_1");
    let b = develop_ball(&p, 4, DEFAULT_VERTEX_BUDGET).unwrap();
    let link = b.local_link().clone();
    assert!(b.is_geodesic(&Path { start: 0, letters: vec![6; 4] }).unwrap());
    assert!(!b.is_geodesic(&Path { start: 0, letters: vec![1, -1] }).unwrap());
    assert!(letters_are_geodesic(&link, &w("2 7 1 8 3 4"), true));
    assert!(letters_are_geodesic(&link, &w("6 5"), true));
    assert_eq!(b.is_geodesic(&Path { start: 0, letters: vec![6; 5] }), Err(CoverError::OutOfBall));
    assert_eq!(b.is_geodesic(&Path { start: 0, letters: vec![9] }), Err(CoverError::Letter(9)));
    // A geodesic of length n ends at distance n.
    let end = b.trace(&[6; 4]).unwrap();
    assert_eq!(b.distance(end), 4);
}

#[test]
fn word_parsing() {
    assert_eq!(w("6 1 -5 -1"), vec![6, 1, -5, -1]);
    assert_eq!(w("6,1,-5"), vec![6, 1, -5]);
    assert!(parse_word("0").is_err());
    assert!(parse_word("x").is_err());
    assert_eq!(inverse(&[1, -2]), vec![2, -1]);
    assert_eq!(commutator(&[1], &[2]), vec![1, 2, -1, -2]);
}

#[test]
fn rings_of_vbar() {
    let r = rings(&rows("Vbar")).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].len(), 8);
    assert_eq!(r[0].letters, vec![1, -6, -5, -3, 7, -2, -8, -4]);
    assert_eq!(covered_letters(&r), 16);
    // The published word with every letter inverted.
    let published = Ring { letters: vec![8, 4, -1, 6, 5, 3, -7, 2] };
    let inverted = Ring { letters: published.letters.iter().map(|s| -s).collect() };
    assert!(r[0].same_as(&inverted));
    assert!(!r[0].same_as(&published));
}

#[test]
fn rings_of_every_class_cover_all_letters() {
    for pr in orientable_presets() {
        let r = rings(&pr.presentation()).unwrap();
        assert!(!r.is_empty());
        assert_eq!(r.iter().map(|x| x.len()).sum::<usize>(), 8, "{}", pr.name);
        assert_eq!(covered_letters(&r), 16, "{}", pr.name);
    }
}

#[test]
fn gauss_bonnet_on_simple_disks() {
    let p = rows("V0");
    let b = develop_ball(&p, 3, DEFAULT_VERTEX_BUDGET).unwrap();
    let t = b.triangles_at(0)[0];
    assert_eq!(gauss_bonnet_audit(&b, &[t]).unwrap(), 6);
    let shape = validate_disk(&b, &[t]).unwrap();
    assert_eq!((shape.boundary_vertices, shape.interior_vertices), (3, 0));
    // Two triangles on one edge at the base, and the full star (not a
    // disk: every base edge carries three triangles).
    assert!(validate_disk(&b, &b.triangles_at(0)).is_err());
    assert!(matches!(gauss_bonnet_audit(&b, &[]), Err(CoverError::NotADisk(_))));
}
