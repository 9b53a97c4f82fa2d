use std::collections::BTreeMap;

use proptest::prelude::*;

use htiling::tile::{tile_face_count, MorseTile};
use htiling::vectors::{corollary_rhs, TilingVectors};
use htiling::{
    compute_vectors, shell_complex, validate_shelling, validate_tiling, IntPolynomial, RelativeComplex, ShellMode,
    Simplex, SimplicialComplex, StellarMode,
};

/// Small complexes on at most six vertices, built from random vertex sets.
fn complexes() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0u32..6, 1..=4), 1..=5)
        .prop_map(|sets| SimplicialComplex::from_facets(sets.into_iter().map(Simplex::from_set)))
}

fn modes() -> impl Strategy<Value = ShellMode> {
    prop_oneof![
        Just(ShellMode::Barycentric),
        Just(ShellMode::Stellar(StellarMode::Facets)),
        Just(ShellMode::Stellar(StellarMode::Ridges)),
        Just(ShellMode::Stellar(StellarMode::Mixed)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stellar_subdivision_keeps_chi_and_dim(k in complexes(), pick in any::<prop::sample::Index>()) {
        let faces: Vec<Simplex> = k.faces().into_iter().filter(|f| f.len() > 1).collect();
        prop_assume!(!faces.is_empty());
        let tau = pick.get(&faces);
        let (sub, apex) = k.stellar_subdivide(tau).unwrap();
        prop_assert_eq!(sub.euler_characteristic(), k.euler_characteristic());
        prop_assert_eq!(sub.dim(), k.dim());
        prop_assert!(!sub.contains_face(tau));
        prop_assert_eq!(sub.provenance().get(&apex), Some(tau));
    }

    #[test]
    fn cascade_matches_barycentric(k in complexes()) {
        let sd = k.barycentric_subdivide();
        let cascade = k.stellar_cascade().unwrap();
        let label: BTreeMap<&Simplex, u32> = sd.provenance().iter().map(|(&id, f)| (f, id)).collect();
        let relabelled = SimplicialComplex::from_facets(cascade.facets().iter().map(|f| {
            Simplex::from_set(f.vertices().iter().map(|v| match cascade.provenance().get(v) {
                Some(face) => label[face],
                None => *v,
            }))
        }));
        let mut a = relabelled.facets().to_vec();
        let mut b = sd.facets().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn shelling_is_valid(k in complexes(), mode in modes()) {
        let s = RelativeComplex::closed(k);
        let r = shell_complex(&s, mode).unwrap();
        prop_assert!(validate_tiling(&r.tiling).ok);
        prop_assert!(validate_shelling(&r.tiling).ok);
        let chi: i64 = r.tiling.critical_indices().iter().map(|&i| if i % 2 == 0 { 1 } else { -1 }).sum();
        prop_assert_eq!(chi, s.euler_characteristic());
        if s.is_pure() && r.tiling.is_h_tiling() {
            let v = compute_vectors(&r.tiling).unwrap();
            prop_assert!(htiling::vectors::check_h_identity(&v).holds);
        }
    }

    #[test]
    fn face_counts_match_enumeration(n in 0usize..7, k in 0usize..8) {
        prop_assume!(k <= n + 1);
        let sigma = Simplex::from_set(0..=n as u32);
        let tile = MorseTile::basic(sigma, Simplex::from_set(0..k as u32));
        for j in 0..=n {
            let brute = tile.faces().iter().filter(|f| f.len() == j + 1).count() as u64;
            prop_assert_eq!(tile_face_count(n, k, j).unwrap(), brute);
        }
    }

    #[test]
    fn weighted_sums_match_polynomial(n in 1usize..7, c in prop::collection::vec(-3i64..4, 7)) {
        let c = c[..n].to_vec();
        let v = TilingVectors { n, h: vec![0; n + 2], c: c.clone(), f: vec![] };
        // -½ moment_p of (C - reflect(C) + χ((1-X)^{n+1} - reflect)), where
        // C is the critical part; h is zero here so only c contributes.
        let xm1 = IntPolynomial::linear(-1, 1);
        let crit: IntPolynomial = (2..=n + 1).map(|k| xm1.pow(k as u32).scale(c[n + 1 - k])).sum();
        let chi: i64 = c.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x } else { -x }).sum();
        let e = IntPolynomial::linear(1, -1).pow((n + 1) as u32).scale(chi);
        let doubled = &(&crit.scale(2) - &crit.reflect(n + 1).scale(2)) + &(&e - &e.reflect(n + 1));
        for p in 1..=4u32 {
            if p == 3 && n <= 2 {
                continue;
            }
            let oracle = -doubled.moment(p);
            prop_assert_eq!(oracle % 2, 0);
            prop_assert_eq!(corollary_rhs(v.n, &v.c, p), oracle / 2, "p = {}", p);
        }
    }
}
