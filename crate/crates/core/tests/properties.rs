use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gallai_product::catalog::{canonical_code, connected_graphs, generate, GenKind};
use gallai_product::classify::classify;
use gallai_product::document::DecompositionDocument;
use gallai_product::oracle::{lower_bound, min_path_decomposition, DEFAULT_ORACLE_BUDGET};
use gallai_product::structured::{decompose, verify_product};
use gallai_product::verify::{gallai_bound, verify_decomposition};
use gallai_product::Graph;

fn kind() -> impl Strategy<Value = GenKind> {
    prop_oneof![Just(GenKind::Tree), Just(GenKind::Unicyclic), Just(GenKind::Bicyclic), Just(GenKind::Connected)]
}

/// Connected graph of the given kind on 4 to `max` vertices.
fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (kind(), 4..=max, any::<u64>()).prop_map(|(k, n, seed)| generate(k, n, seed).unwrap())
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm)
}

/// Plain graph6 writer for graphs on fewer than 63 vertices.
fn graph6(g: &Graph) -> String {
    let mut bits = Vec::new();
    for j in 1..g.n() {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::from(char::from(63 + g.n() as u8));
    for chunk in bits.chunks(6) {
        let v = chunk.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | ((b as u8) << (5 - k)));
        out.push(char::from(63 + v));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::parse_graph6(&graph6(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph(10)) {
        let text = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&text).unwrap(), g);
    }

    #[test]
    fn classification_ignores_labels(g in graph(10), seed in any::<u64>()) {
        let h = shuffled(&g, seed);
        prop_assert_eq!(classify(&g).unwrap().tag(), classify(&h).unwrap().tag());
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn decompositions_verify_under_relabeling(
        g in (prop_oneof![Just(GenKind::Unicyclic), Just(GenKind::Bicyclic)], 4..=8usize, any::<u64>())
            .prop_map(|(k, n, s)| generate(k, n, s).unwrap()),
        hn in 2..=4usize,
        seed in any::<u64>(),
    ) {
        let h = generate(GenKind::Connected, hn, seed).unwrap();
        let g2 = shuffled(&g, seed);
        for g in [&g, &g2] {
            let d = decompose(g, &h).unwrap();
            let r = verify_product(g, &h, &d);
            prop_assert!(r.passed, "{:?}", r.failures);
            prop_assert!(d.len() <= gallai_bound(g.n() * h.n()));
        }
    }

    #[test]
    fn documents_round_trip(g in graph(6), seed in any::<u64>()) {
        let h = generate(GenKind::Connected, 3, seed).unwrap();
        let Ok(d) = decompose(&g, &h) else { return Ok(()) };
        let doc = DecompositionDocument::new(&g, &h, &d);
        let back: DecompositionDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(back.decomposition(), d);
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn corruptions_are_caught(
        g in (prop_oneof![Just(GenKind::Tree), Just(GenKind::Unicyclic), Just(GenKind::Bicyclic)], 3..=7usize, any::<u64>())
            .prop_map(|(k, n, s)| generate(k, n.max(k.min_order()), s).unwrap()),
        hn in 2..=4usize,
        seed in any::<u64>(),
        which in 0..5usize,
        pick in any::<prop::sample::Index>(),
    ) {
        let h = generate(GenKind::Connected, hn, seed).unwrap();
        let product = g.cartesian_product(&h);
        let mut paths = decompose(&g, &h).unwrap().index_paths(h.n());
        prop_assert!(verify_decomposition(&product, &paths).passed);
        let i = pick.index(paths.len());
        let kind = match which {
            0 => {
                paths.remove(i);
                "edge_uncovered"
            }
            1 => {
                let p = paths[i][..2].to_vec();
                paths.push(p);
                "edge_reused"
            }
            2 => {
                // jump to a vertex that is not adjacent to the path end
                let end = *paths[i].last().unwrap();
                let Some(far) = (0..product.n()).find(|&v| v != end && !product.has_edge(end, v)) else {
                    return Ok(());
                };
                paths[i].push(far);
                "not_an_edge"
            }
            3 => {
                // walk back along the last edge
                let k = paths[i].len();
                let back = paths[i][k - 2];
                paths[i].push(back);
                "repeated_vertex"
            }
            _ => {
                let bound = gallai_bound(product.n());
                while paths.len() <= bound {
                    let p = paths[0].clone();
                    paths.push(p);
                }
                "bound"
            }
        };
        let r = verify_decomposition(&product, &paths);
        prop_assert!(!r.passed);
        prop_assert!(r.failures.iter().any(|(k, _)| k == kind), "{} not in {:?}", kind, r.failures);
    }
}

#[test]
fn oracle_within_bounds_on_small_catalog() {
    for n in 2..=8 {
        for g in connected_graphs(n, None) {
            let r = min_path_decomposition(&g, DEFAULT_ORACLE_BUDGET).unwrap();
            assert!(r.value >= lower_bound(&g));
            assert!(r.value <= gallai_bound(n), "p = {} on {:?}", r.value, g.edges());
            assert!(verify_decomposition(&g, &r.paths).failures.iter().all(|(k, _)| k == "bound"));
            assert_eq!(r.paths.len(), r.value);
        }
    }
}
