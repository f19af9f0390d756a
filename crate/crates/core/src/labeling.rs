//! Vertex labelings, edge weights, and the edge-irregularity verifier.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{Edge, Graph, VertexId};
use crate::{Error, Result};

/// Vertex labels together with the bound `k` they claim to respect.
///
/// Labels outside `1..=k` are representable on purpose: [`verify`] reports
/// them instead of construction rejecting them, so third-party labelings can
/// be audited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    k: u32,
    labels: BTreeMap<VertexId, u32>,
}

impl Labeling {
    pub fn new(k: u32) -> Self {
        Labeling {
            k,
            labels: BTreeMap::new(),
        }
    }

    pub fn from_pairs(k: u32, pairs: impl IntoIterator<Item = (VertexId, u32)>) -> Self {
        Labeling {
            k,
            labels: pairs.into_iter().collect(),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn set(&mut self, v: VertexId, label: u32) {
        self.labels.insert(v, label);
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.labels.get(&v).copied()
    }

    /// Labels in canonical vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.labels.iter().map(|(&v, &a)| (v, a))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_label(&self) -> Option<u32> {
        self.labels.values().copied().max()
    }

    /// Sum of the endpoint labels. Computed in `u64`, so no pair of `u32`
    /// labels can overflow.
    pub fn weight(&self, edge: Edge) -> Result<u64> {
        let a = self.get(edge.0).ok_or(Error::Unlabeled(edge.0))?;
        let b = self.get(edge.1).ok_or(Error::Unlabeled(edge.1))?;
        Ok(u64::from(a) + u64::from(b))
    }
}

/// Two distinct edges with the same weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Collision {
    pub first: Edge,
    pub second: Edge,
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Vertices whose label is 0 or above `k`, in canonical order.
    pub out_of_range: Vec<(VertexId, u32)>,
    /// Every unordered pair of equal-weight edges, once. Pairs are ordered by
    /// the position of their edges in the graph's edge list.
    pub collisions: Vec<Collision>,
    /// Edge weights in edge-list order.
    pub weights: Vec<u64>,
}

/// Checks that every label lies in `1..=k` and that all edge weights differ.
///
/// The labeling must cover exactly the graph's vertices; anything else is an
/// error rather than an invalid report.
pub fn verify(g: &Graph, labeling: &Labeling) -> Result<VerifyReport> {
    if let Some(v) = g.vertices().iter().find(|&&v| labeling.get(v).is_none()) {
        return Err(Error::Unlabeled(*v));
    }
    if let Some((v, _)) = labeling.iter().find(|&(v, _)| !g.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }

    let k = labeling.k();
    let out_of_range: Vec<_> = labeling.iter().filter(|&(_, a)| a == 0 || a > k).collect();

    let weights = g
        .edges()
        .iter()
        .map(|&e| labeling.weight(e))
        .collect::<Result<Vec<_>>>()?;

    let mut by_weight: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(i);
    }
    let mut pairs = Vec::new();
    for group in by_weight.values().filter(|grp| grp.len() > 1) {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                pairs.push((i, j));
            }
        }
    }
    pairs.sort_unstable();
    let collisions: Vec<_> = pairs
        .into_iter()
        .map(|(i, j)| Collision {
            first: g.edges()[i],
            second: g.edges()[j],
            weight: weights[i],
        })
        .collect();

    Ok(VerifyReport {
        valid: out_of_range.is_empty() && collisions.is_empty(),
        out_of_range,
        collisions,
        weights,
    })
}

/// The two terms of the general lower bound on the edge irregularity strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundInfo {
    /// `ceil((|E| + 1) / 2)`: distinct weights live in `[2, 2k]`.
    pub edge_term: u32,
    /// Maximum degree: edges at one vertex need distinct labels at the far end.
    pub degree_term: u32,
    pub lower_bound: u32,
}

pub fn lower_bound(g: &Graph) -> Result<BoundInfo> {
    let degree_term = g.max_degree()?;
    let m = g.edges().len() as u32;
    let edge_term = (m + 1).div_ceil(2);
    Ok(BoundInfo {
        edge_term,
        degree_term,
        lower_bound: edge_term.max(degree_term),
    })
}
