//! Independent reference implementations used as test oracles. Nothing here
//! calls into the verifier or the solver.

#![allow(dead_code)]

use dandelion_core::{Edge, Graph, VertexId};

/// Naive all-pairs collision list: every (i, j) with i < j and equal weights.
pub fn naive_collisions(
    edges: &[Edge],
    label: impl Fn(VertexId) -> u32,
) -> Vec<(usize, usize, u64)> {
    let w: Vec<u64> = edges
        .iter()
        .map(|e| u64::from(label(e.0)) + u64::from(label(e.1)))
        .collect();
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] == w[j] {
                out.push((i, j, w[i]));
            }
        }
    }
    out
}

/// Tries every assignment in `[1, k]^n` in lexicographic order, with no
/// pruning at all. Returns the first edge irregular labeling found.
pub fn enumerate(g: &Graph, k: u32) -> Option<Vec<(VertexId, u32)>> {
    let vs = g.vertices();
    let idx: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (g.index_of(e.0).unwrap(), g.index_of(e.1).unwrap()))
        .collect();
    if k == 0 {
        return None;
    }
    let mut labels = vec![1u32; vs.len()];
    let mut seen = vec![0u32; 2 * k as usize + 1];
    let mut stamp = 0u32;
    loop {
        stamp += 1;
        let ok = idx.iter().all(|&(a, b)| {
            let w = (labels[a] + labels[b]) as usize;
            let fresh = seen[w] != stamp;
            seen[w] = stamp;
            fresh
        });
        if ok {
            return Some(vs.iter().copied().zip(labels).collect());
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == labels.len() {
                return None;
            }
            if labels[pos] < k {
                labels[pos] += 1;
                break;
            }
            labels[pos] = 1;
            pos += 1;
        }
    }
}

/// Smallest k with an edge irregular k-labeling, by enumeration from k = 1.
pub fn enumerate_es(g: &Graph) -> u32 {
    (1..).find(|&k| enumerate(g, k).is_some()).unwrap()
}
