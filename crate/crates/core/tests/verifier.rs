mod common;

use std::collections::BTreeMap;

use dandelion_core::{dandelion, path, star, verify, Edge, Graph, Labeling, VertexId};
use proptest::prelude::*;

fn admissible() -> impl Strategy<Value = (u32, u32)> {
    (2u32..10).prop_flat_map(|l| (l + 1..=14u32, Just(l)))
}

fn labeled(g: &Graph, k: u32, raw: &[u32]) -> Labeling {
    Labeling::from_pairs(
        k,
        g.vertices()
            .iter()
            .zip(raw)
            .map(|(&v, &a)| (v, a % (k + 1) + 1)),
    )
}

proptest! {
    #[test]
    fn agrees_with_all_pairs_oracle(
        (n, l) in admissible(),
        k in 1u32..12,
        raw in prop::collection::vec(0u32..40, 14),
    ) {
        let g = dandelion(n, l).unwrap();
        // Labels range over [1, k+1] so out-of-range labels show up too.
        let lab = labeled(&g, k, &raw);
        let report = verify(&g, &lab).unwrap();
        let expected = common::naive_collisions(g.edges(), |v| lab.get(v).unwrap());
        let got: Vec<_> = report
            .collisions
            .iter()
            .map(|c| {
                let i = g.edges().iter().position(|&e| e == c.first).unwrap();
                let j = g.edges().iter().position(|&e| e == c.second).unwrap();
                (i, j, c.weight)
            })
            .collect();
        prop_assert_eq!(got, expected.clone());
        let in_range = lab.iter().all(|(_, a)| (1..=k).contains(&a));
        prop_assert_eq!(report.valid, in_range && expected.is_empty());
        for c in &report.collisions {
            prop_assert_eq!(lab.weight(c.first).unwrap(), lab.weight(c.second).unwrap());
        }
    }

    #[test]
    fn valid_labelings_respect_the_edge_term(
        (n, l) in admissible(),
        k in 1u32..12,
        raw in prop::collection::vec(0u32..40, 14),
    ) {
        let g = dandelion(n, l).unwrap();
        let lab = labeled(&g, k, &raw);
        let report = verify(&g, &lab).unwrap();
        if report.valid {
            prop_assert!(report.weights.iter().all(|&w| (2..=2 * u64::from(k)).contains(&w)));
            prop_assert!((g.edges().len() as u32) < 2 * k);
        }
        if k < (g.edges().len() as u32 + 1).div_ceil(2) {
            prop_assert!(!report.valid);
        }
    }

    #[test]
    fn permuting_leaves_keeps_the_verdict(
        (n, l) in admissible(),
        k in 1u32..12,
        raw in prop::collection::vec(0u32..40, 14),
        shuffle in any::<prop::sample::Index>(),
    ) {
        let g = dandelion(n, l).unwrap();
        let lab = labeled(&g, k, &raw);
        let leaves = n - l;
        let shift = shuffle.index(leaves as usize) as u32;
        let moved = |v: VertexId| match v {
            VertexId::Leaf(i) => VertexId::Leaf((i - 1 + shift) % leaves + 1),
            v => v,
        };
        let permuted = Labeling::from_pairs(k, lab.iter().map(|(v, a)| (moved(v), a)));
        let a = verify(&g, &lab).unwrap();
        let b = verify(&g, &permuted).unwrap();
        prop_assert_eq!(a.valid, b.valid);
        prop_assert_eq!(a.collisions.len(), b.collisions.len());
        let sorted = |mut w: Vec<u64>| { w.sort_unstable(); w };
        prop_assert_eq!(sorted(a.weights), sorted(b.weights));
    }
}

#[test]
fn weight_multiset_of_the_case_two_figure() {
    let g = dandelion(9, 5).unwrap();
    let labels: BTreeMap<_, _> = [("p0", 1), ("p1", 5), ("p2", 5), ("p3", 4), ("p4", 4)]
        .into_iter()
        .map(|(v, a)| (v.parse::<VertexId>().unwrap(), a))
        .chain((1..=4).map(|i| (VertexId::Leaf(i), i)))
        .collect();
    let report = verify(&g, &Labeling::from_pairs(5, labels)).unwrap();
    assert!(report.valid);
    let mut w = report.weights.clone();
    w.sort_unstable();
    assert_eq!(w, [2, 3, 4, 5, 6, 8, 9, 10]);
}

#[test]
fn custom_graph_with_two_unit_edges() {
    let a = VertexId::Leaf(1);
    let b = VertexId::Leaf(2);
    let c = VertexId::Leaf(3);
    let d = VertexId::Leaf(4);
    let g = Graph::from_edges([Edge(a, b), Edge(c, d)], []).unwrap();
    let lab = Labeling::from_pairs(1, [(a, 1), (b, 1), (c, 1), (d, 1)]);
    let r = verify(&g, &lab).unwrap();
    assert!(!r.valid);
    assert_eq!(r.collisions.len(), 1);
    assert_eq!(r.collisions[0].weight, 2);
}

#[test]
fn star_and_path_labelings() {
    let s = star(3).unwrap();
    let lab = Labeling::from_pairs(
        3,
        s.vertices().iter().map(|&v| match v {
            VertexId::Leaf(i) => (v, i),
            _ => (v, 1),
        }),
    );
    assert!(verify(&s, &lab).unwrap().valid);
    let p = path(2).unwrap();
    let lab = Labeling::from_pairs(4, [(VertexId::PathNode(0), 4), (VertexId::PathNode(1), 4)]);
    assert_eq!(verify(&p, &lab).unwrap().weights, [8]);
}
