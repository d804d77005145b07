//! Property suites over randomly generated small complexes and graphs.

use proptest::prelude::*;

use morse_core::complex::SimplicialComplex;
use morse_core::graph_morse::{self, Graph};
use morse_core::hasse::HasseDiagram;
use morse_core::homology::{
    chain_complex, rank_mod_p, reduced_homology, smith_invariant_factors, IntegerMatrix,
};
use morse_core::morse::{
    critical_faces, enumerate_matchings, matching_from_morse_function,
    morse_function_from_matching, MatchMode,
};

/// A random facet family on at most 6 vertices with faces of dimension <= 3.
fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    let facet = proptest::collection::btree_set(0u32..6, 1..=4);
    proptest::collection::vec(facet, 1..6).prop_map(|facets| {
        let facets: Vec<Vec<u32>> = facets
            .into_iter()
            .map(|f| f.into_iter().collect())
            .collect();
        SimplicialComplex::from_facets(&facets).expect("sets of distinct vertices")
    })
}

/// A random simple graph on at most 6 nodes.
fn arb_graph() -> impl Strategy<Value = Graph> {
    proptest::collection::btree_set((0u32..6, 0u32..6), 0..10).prop_map(|pairs| {
        let edges: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut dedup = edges;
        dedup.sort_unstable();
        dedup.dedup();
        Graph::new(6, &dedup).expect("simple by construction")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_characteristic_agrees_with_homology(c in arb_complex()) {
        let h = reduced_homology(&c).unwrap();
        prop_assert_eq!(
            h.reduced_euler_characteristic(),
            c.reduced_euler_characteristic()
        );
    }

    #[test]
    fn boundary_composites_vanish(c in arb_complex()) {
        // construction asserts every composite boundary is zero
        let cc = chain_complex(&c);
        prop_assert!(cc.boundaries().len() == c.dim() + 1);
    }

    #[test]
    fn smith_rank_matches_prime_field_rank(c in arb_complex()) {
        let cc = chain_complex(&c);
        for m in cc.boundaries() {
            prop_assert_eq!(smith_invariant_factors(m).len(), rank_mod_p(m));
        }
    }

    #[test]
    fn smith_factors_survive_relabeling(c in arb_complex(), seed in 0u64..1 << 32) {
        let cc = chain_complex(&c);
        let m = cc.boundary(c.dim());
        let perm = |len: usize, mut s: u64| -> Vec<u32> {
            let mut v: Vec<u32> = (0..len as u32).collect();
            for i in (1..len).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (s >> 33) as usize % (i + 1));
            }
            v
        };
        let permuted = m.permuted(&perm(m.rows(), seed), &perm(m.cols(), seed ^ 0xabcdef));
        prop_assert_eq!(smith_invariant_factors(m), smith_invariant_factors(&permuted));
    }

    #[test]
    fn matching_counts_and_round_trips(c in arb_complex()) {
        let h = HasseDiagram::new(&c);
        if h.edge_count() > 14 {
            return Ok(()); // keep enumeration cheap
        }
        let all = enumerate_matchings(&h, MatchMode::All);
        for m in all.iter().take(64) {
            prop_assert_eq!(h.face_count(), 2 * m.len() + critical_faces(&h, m).len());
            let f = morse_function_from_matching(&h, m).unwrap();
            prop_assert_eq!(&matching_from_morse_function(&h, &f).unwrap(), m);
        }
    }

    #[test]
    fn graph_matchings_biject_with_rooted_forests(g in arb_graph()) {
        let h = HasseDiagram::new(&g.as_complex());
        if h.edge_count() > 14 {
            return Ok(());
        }
        let matchings = enumerate_matchings(&h, MatchMode::All);
        let forest_counts = graph_morse::count_rooted_forests_by_size(&g);
        let mut matching_counts = vec![0u64; forest_counts.len()];
        for m in &matchings {
            matching_counts[m.len()] += 1;
        }
        prop_assert_eq!(matching_counts, forest_counts);
    }

    #[test]
    fn graph_acyclicity_matches_forest_acyclicity(g in arb_graph()) {
        // for graphs, a matching is acyclic exactly when its oriented edge
        // set is a valid rooted forest
        let complex = g.as_complex();
        let h = HasseDiagram::new(&complex);
        if h.edge_count() > 12 {
            return Ok(());
        }
        for m in enumerate_matchings(&h, MatchMode::All).iter().take(128) {
            prop_assert!(graph_morse::matching_to_rooted_forest(&g, &h, m).is_ok());
        }
    }

    #[test]
    fn matrix_rank_bounded_by_dimensions(rows in 1usize..6, cols in 1usize..6, seed in 0u64..1 << 30) {
        let mut s = seed;
        let mut entries = Vec::new();
        for r in 0..rows as u32 {
            for c in 0..cols as u32 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let v = ((s >> 40) as i64 % 7) - 3;
                if v != 0 {
                    entries.push((r, c, num_bigint::BigInt::from(v)));
                }
            }
        }
        let m = IntegerMatrix::new(rows, cols, entries);
        let factors = smith_invariant_factors(&m);
        prop_assert!(factors.len() <= rows.min(cols));
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).bits() == 0 || (&w[1] % &w[0]) == num_bigint::BigInt::from(0));
        }
    }
}
