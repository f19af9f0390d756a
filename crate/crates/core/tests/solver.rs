mod common;

use dandelion_core::{
    classify, construct, dandelion, es_exact, exists_labeling, lower_bound, path, verify, CaseKind,
    Edge, EsStatus, Feasibility, Graph, Labeling, SearchBudget, Solver, VertexId,
};
use proptest::prelude::*;

fn witness_of(f: Feasibility) -> Option<Labeling> {
    match f {
        Feasibility::Witness(w) => Some(w),
        _ => None,
    }
}

#[test]
fn small_dandelions_match_enumeration() {
    for l in 2..=7u32 {
        for n in l + 1..=9 {
            let g = dandelion(n, l).unwrap();
            let r = es_exact(&g, SearchBudget::unlimited()).unwrap();
            let EsStatus::Exact { k, witness } = &r.status else {
                panic!("D({n},{l}) unsolved");
            };
            let report = verify(&g, witness).unwrap();
            assert!(report.valid && witness.k() == *k);
            assert!(*k >= lower_bound(&g).unwrap().lower_bound);
            assert!(common::enumerate(&g, *k).is_some());
            // Refute k-1 by pruned search and confirm with enumeration.
            let below = Solver::new(SearchBudget::unlimited())
                .bound_shortcut(false)
                .exists_labeling(&g, k - 1);
            assert_eq!(below.feasibility, Feasibility::Infeasible, "D({n},{l})");
            assert!(common::enumerate(&g, k - 1).is_none(), "D({n},{l})");
        }
    }
}

#[test]
fn figure_four_strength_is_four() {
    let g = dandelion(7, 5).unwrap();
    let r = es_exact(&g, SearchBudget::unlimited()).unwrap();
    assert_eq!(r.exact_k(), Some(4));
    assert_eq!(common::enumerate_es(&g), 4);
}

#[test]
fn path_strengths_match_enumeration() {
    // es(P_n) for n = 2..=10, computed by common::enumerate_es.
    let table = [1, 2, 2, 3, 3, 4, 4, 5, 5];
    for (n, &expected) in (2..=10u32).zip(&table) {
        let g = path(n).unwrap();
        assert_eq!(common::enumerate_es(&g), expected, "P_{n} oracle");
        let r = es_exact(&g, SearchBudget::unlimited()).unwrap();
        assert_eq!(r.exact_k(), Some(expected), "P_{n}");
    }
}

#[test]
fn constructions_are_optimal_in_the_tight_regimes() {
    for l in 2..=15u32 {
        for n in l + 1..=16 {
            let case = classify(n, l).unwrap();
            if case == CaseKind::Case3 {
                continue;
            }
            let c = construct(n, l, true).unwrap();
            assert!(c.report.valid);
            let r = es_exact(&dandelion(n, l).unwrap(), SearchBudget::unlimited()).unwrap();
            assert_eq!(r.exact_k(), Some(c.claimed_k), "D({n},{l})");
        }
    }
}

#[test]
fn feasibility_is_monotone() {
    for (n, l) in [(7, 5), (9, 5), (10, 5), (8, 3)] {
        let g = dandelion(n, l).unwrap();
        let es = es_exact(&g, SearchBudget::unlimited())
            .unwrap()
            .exact_k()
            .unwrap();
        for k in es..es + 4 {
            let w = witness_of(exists_labeling(&g, k, SearchBudget::unlimited()).feasibility)
                .unwrap_or_else(|| panic!("D({n},{l}) k={k}"));
            assert!(verify(&g, &w).unwrap().valid);
        }
    }
}

#[test]
fn deterministic_witnesses() {
    let g = dandelion(12, 6).unwrap();
    let a = es_exact(&g, SearchBudget::unlimited()).unwrap();
    let b = es_exact(&g, SearchBudget::unlimited()).unwrap();
    assert_eq!(a, b);
}

/// Random simple graphs on up to six vertices, named p0..p5.
fn small_graph() -> impl Strategy<Value = Graph> {
    (2u32..=6)
        .prop_flat_map(|n| {
            let pairs: Vec<(u32, u32)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            let len = pairs.len();
            (
                Just(n),
                Just(pairs),
                prop::collection::vec(any::<bool>(), len),
            )
        })
        .prop_filter_map("needs an edge", |(n, pairs, keep)| {
            let edges: Vec<Edge> = pairs
                .into_iter()
                .zip(keep)
                .filter(|&(_, k)| k)
                .map(|((a, b), _)| Edge(VertexId::PathNode(a), VertexId::PathNode(b)))
                .collect();
            if edges.is_empty() {
                return None;
            }
            Graph::from_edges(edges, (0..n).map(VertexId::PathNode)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arbitrary_small_graphs_match_enumeration(g in small_graph()) {
        let r = es_exact(&g, SearchBudget::unlimited()).unwrap();
        let k = r.exact_k().unwrap();
        prop_assert_eq!(k, common::enumerate_es(&g));
        if let EsStatus::Exact { witness, .. } = &r.status {
            prop_assert!(verify(&g, witness).unwrap().valid);
        }
        for a in &r.attempts[..r.attempts.len() - 1] {
            prop_assert!(common::enumerate(&g, a.k).is_none());
        }
    }

    #[test]
    fn leaf_heavy_graphs_match_enumeration(leaves in 1u32..=5, extra in 0u32..=2) {
        // Star plus a pendant path, built by hand so twins are exercised
        // outside the dandelion constructor.
        let mut edges: Vec<Edge> = (1..=leaves).map(|i| Edge(VertexId::HUB, VertexId::Leaf(i))).collect();
        edges.extend((0..extra).map(|j| Edge(VertexId::PathNode(j), VertexId::PathNode(j + 1))));
        let g = Graph::from_edges(edges, []).unwrap();
        let k = es_exact(&g, SearchBudget::unlimited()).unwrap().exact_k().unwrap();
        prop_assert_eq!(k, common::enumerate_es(&g));
    }
}
