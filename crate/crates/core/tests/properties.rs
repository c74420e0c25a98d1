mod common;

use annihilator::graph::{encode_edge_list, parse_edge_list};
use annihilator::invariants::{
    annihilating_set_status, annihilation_number, critical_difference,
    critical_independence_number, critical_oracle, independence_number_exact,
    maximum_independent_sets, maximum_matching,
};
use annihilator::lab::{check_if_direction, run_search, GraphSource, SearchOptions, Status};
use annihilator::{encode_graph6, full_report, parse_graph6, Graph, VertexSet};
use proptest::prelude::*;

use common::{brute_alpha, brute_annihilation, brute_critical, brute_matching};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
}

/// Sparse and dense graphs both show up, unlike with fair coin flips.
fn graph_with_density(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| annihilator::lab::sample_random_graph(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = encode_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in graph(16)) {
        let all: VertexSet = (0..g.n()).collect();
        prop_assert_eq!(g.degree_sum(&all).unwrap(), 2 * g.m());
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.m());
        prop_assert_eq!(g.edges().count(), g.m());
    }

    #[test]
    fn double_cover_shape(g in graph(12)) {
        let cover = g.bipartite_double_cover();
        prop_assert_eq!(cover.n(), 2 * g.n());
        prop_assert_eq!(cover.m(), 2 * g.m());
        prop_assert!(cover.is_bipartite());
    }

    #[test]
    fn removing_a_vertex(g in graph(10), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.n() > 0);
        let v = pick.index(g.n());
        let h = g.remove_vertex(v).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(h.m(), g.m() - g.degree(v));
    }

    #[test]
    fn components_partition_vertices(g in graph(12)) {
        let components = g.connected_components();
        prop_assert_eq!(components.iter().map(VertexSet::len).sum::<usize>(), g.n());
        prop_assert_eq!(g.is_connected(), components.len() == 1);
    }

    #[test]
    fn claw_certificates(g in graph(9)) {
        if let Some(claw) = g.find_claw() {
            for &leaf in &claw.leaves {
                prop_assert!(g.is_adjacent(claw.center, leaf));
            }
            prop_assert!(g.is_independent(&claw.leaves.into()));
        }
    }

    #[test]
    fn annihilation_matches_definition(g in graph_with_density(14)) {
        let (a, witness) = annihilation_number(&g);
        prop_assert_eq!(a, brute_annihilation(&g));
        prop_assert_eq!(witness.len(), a);
        prop_assert!(g.degree_sum(&witness).unwrap() <= g.m());
        prop_assert!(a >= g.n() / 2);
        prop_assert!(annihilating_set_status(&g, &witness).unwrap().maximum);
    }

    #[test]
    fn exact_alpha_matches_brute_force(g in graph_with_density(14)) {
        let (alpha, witness) = independence_number_exact(&g, 64).unwrap();
        prop_assert_eq!(alpha, brute_alpha(&g));
        prop_assert_eq!(witness.len(), alpha);
        prop_assert!(g.is_independent(&witness));
    }

    #[test]
    fn maximum_independent_sets_are_complete(g in graph_with_density(9)) {
        let alpha = brute_alpha(&g);
        let sets = maximum_independent_sets(&g, 14).unwrap();
        let nbrs = common::neighbor_masks(&g);
        let expected = (0u32..1 << g.n())
            .filter(|&s| s.count_ones() as usize == alpha)
            .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || nbrs[v] & s == 0))
            .count();
        prop_assert_eq!(sets.len(), expected);
        prop_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(sets.iter().all(|s| s.len() == alpha && g.is_independent(s)));
    }

    #[test]
    fn blossom_matches_brute_force(g in graph_with_density(12)) {
        let matching = maximum_matching(&g);
        prop_assert_eq!(matching.len(), brute_matching(&g));
        let mut seen = vec![false; g.n()];
        for (u, v) in matching.edges() {
            prop_assert!(g.is_adjacent(u, v));
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn critical_values_match_brute_force(g in graph_with_density(13)) {
        let (d, alpha_crit) = brute_critical(&g);
        let (poly_d, d_witness) = critical_difference(&g);
        let (poly_alpha_crit, witness) = critical_independence_number(&g);
        prop_assert_eq!(poly_d, d);
        prop_assert_eq!(poly_alpha_crit, alpha_crit);
        for set in [&d_witness, &witness] {
            prop_assert!(g.is_independent(set));
            let closed = g.neighborhood(set).unwrap().len();
            prop_assert_eq!(set.len() as isize - closed as isize, d as isize);
        }
        let oracle = critical_oracle(&g, 20).unwrap();
        prop_assert_eq!((oracle.difference, oracle.alpha_crit), (d, alpha_crit));
    }

    #[test]
    fn inequality_chain(g in graph_with_density(16)) {
        let r = full_report(&g);
        let alpha = r.alpha.unwrap();
        let alpha_crit = r.alpha_crit.unwrap();
        prop_assert!(alpha_crit <= alpha && alpha <= r.annihilation);
        prop_assert!(r.annihilation >= g.n() / 2);
        prop_assert!(alpha + r.mu <= g.n() || g.n() == 0);
        prop_assert!(r.crit_diff.unwrap() <= alpha_crit);
    }

    #[test]
    fn bipartite_graphs_have_alpha_crit_equal_alpha(g in graph_with_density(12)) {
        prop_assume!(g.is_bipartite());
        let r = full_report(&g);
        prop_assert_eq!(r.alpha_crit, r.alpha);
        prop_assert_eq!(r.koenig_egervary, Some(true));
    }

    #[test]
    fn if_direction_is_never_violated(g in graph_with_density(10)) {
        prop_assert_ne!(check_if_direction(&g).unwrap().status, Status::Violated);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn search_tallies_sum_to_graph_count(n in 1usize..9, p in 0.0..=1.0f64, seed in any::<u64>(), jobs in 1usize..4) {
        let spec = annihilator::lab::RandomSpec { n, p, seed, count: 40 };
        let options = SearchOptions { jobs, ..Default::default() };
        let report = run_search(GraphSource::Random(spec), &options).unwrap();
        prop_assert_eq!(report.graphs_examined, 40);
        for tally in report.tallies.values() {
            prop_assert_eq!(tally.holds + tally.not_applicable + tally.violated + tally.errors, 40);
        }
        prop_assert_eq!(report.unexpected_violations(), 0);
        let serial = run_search(GraphSource::Random(spec), &SearchOptions { jobs: 1, ..Default::default() }).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&serial.without_timing()).unwrap(),
            serde_json::to_string(&report.without_timing()).unwrap()
        );
    }
}

#[test]
fn violations_carry_checkable_evidence() {
    let g = common::c3_plus_k1();
    let verdict = annihilator::lab::check_only_if(&g).unwrap();
    let evidence = verdict.evidence.unwrap();
    assert_eq!(evidence.alpha, Some(brute_alpha(&g)));
    assert_eq!(evidence.annihilation, brute_annihilation(&g));
    assert_eq!(evidence.alpha_crit, brute_critical(&g).1);
    assert_eq!(evidence.mu, Some(brute_matching(&g)));
}
