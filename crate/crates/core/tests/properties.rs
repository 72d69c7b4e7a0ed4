//! Randomized invariants of the geometry layer.

use doily::{
    build_w2_symplectic, dual, find_isomorphism, is_hyperplane, perp, span_closure, Gf2Vector,
    PointLineGeometry, PointSet,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// W(2) with its points renamed by `perm`.
fn relabel(g: &PointLineGeometry, perm: &[usize]) -> PointLineGeometry {
    let lines = g
        .lines()
        .iter()
        .map(|l| PointSet::from_indices(l.iter().map(|x| perm[x])))
        .collect();
    PointLineGeometry::new(g.num_points(), lines).unwrap()
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    Just((0..15).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn hyperplane_test_matches_definition(mask in 0u64..(1 << 15)) {
        let g = build_w2_symplectic().geometry().clone();
        let s = PointSet::from_mask(mask);
        let by_definition = s != g.all_points()
            && g.lines().iter().all(|&l| (l & s).len() == 1 || l.is_subset(s));
        prop_assert_eq!(is_hyperplane(&g, s), by_definition);
    }

    #[test]
    fn perp_is_antitone_and_closed(a in 1u64..(1 << 15), b in 1u64..(1 << 15)) {
        let g = build_w2_symplectic().geometry().clone();
        let (a, b) = (PointSet::from_mask(a), PointSet::from_mask(b));
        let small = a & b;
        if !small.is_empty() {
            prop_assert!(perp(&g, a).unwrap().is_subset(perp(&g, small).unwrap()));
        }
        let pa = perp(&g, a).unwrap();
        if !pa.is_empty() {
            let ppa = perp(&g, pa).unwrap();
            if !ppa.is_empty() {
                prop_assert_eq!(perp(&g, ppa).unwrap(), pa);
            }
        }
    }

    #[test]
    fn relabelled_copy_is_isomorphic(perm in permutation()) {
        let g = build_w2_symplectic().geometry().clone();
        let h = relabel(&g, &perm);
        let iso = find_isomorphism(&g, &h).expect("relabelled copy is isomorphic");
        prop_assert!(iso.is_isomorphism(&g, &h));
        prop_assert!(iso.inverse().is_isomorphism(&h, &g));
    }

    #[test]
    fn dual_of_relabelled_copy_is_w2(perm in permutation()) {
        let g = build_w2_symplectic().geometry().clone();
        let d = dual(&relabel(&g, &perm)).unwrap();
        prop_assert!(find_isomorphism(&g, &d).is_some());
    }

    #[test]
    fn span_closure_is_a_subspace(masks in subsequence((1u32..16).collect::<Vec<_>>(), 1..4)) {
        let gens: Vec<Gf2Vector> = masks.iter().map(|&m| Gf2Vector::new(m, 4).unwrap()).collect();
        let span = span_closure(&gens).unwrap();
        prop_assert!((span.len() + 1).is_power_of_two());
        for &u in &span {
            for &v in span.iter().filter(|&&v| v != u) {
                prop_assert!(span.contains(&(u + v)));
            }
        }
        for g in &gens {
            prop_assert!(span.contains(g));
        }
    }
}
