//! Dandelions, stars and paths with a shared vertex naming scheme.
//!
//! Every vertex is either a leaf `x_i` (`i >= 1`) or a path node `p_j`
//! (`j >= 0`). The hub of a dandelion, the center of a star and the first
//! vertex of a path are all `p_0`. Canonical vertex order is all leaves by
//! index, then all path nodes by index, which is what `Ord` on [`VertexId`]
//! gives.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexId {
    Leaf(u32),
    PathNode(u32),
}

impl VertexId {
    pub const HUB: VertexId = VertexId::PathNode(0);

    pub fn is_leaf(self) -> bool {
        matches!(self, VertexId::Leaf(_))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Leaf(i) => write!(f, "x{i}"),
            VertexId::PathNode(j) => write!(f, "p{j}"),
        }
    }
}

/// Parses `x[1-9][0-9]*` and `p(0|[1-9][0-9]*)`. Leading zeros are rejected so
/// that every vertex has exactly one spelling.
impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::VertexName(s.to_string());
        let (tag, digits) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        match tag {
            "x" if index >= 1 => Ok(VertexId::Leaf(index)),
            "p" => Ok(VertexId::PathNode(index)),
            _ => Err(bad()),
        }
    }
}

/// An undirected edge. Endpoints keep the order they were created in, which
/// for the built-in families is hub first, then lower path index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    /// Endpoints sorted, for order-insensitive comparison.
    pub fn normalized(self) -> (VertexId, VertexId) {
        if self.0 <= self.1 {
            (self.0, self.1)
        } else {
            (self.1, self.0)
        }
    }

    pub fn touches(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Dandelion { n: u32, l: u32 },
    Star { leaves: u32 },
    Path { len: u32 },
    Custom,
}

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    family: Family,
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Vertices are the edge
    /// endpoints plus `isolated`, kept in canonical order.
    pub fn from_edges(
        edges: impl IntoIterator<Item = Edge>,
        isolated: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        Self::build(Family::Custom, edges.into_iter().collect(), isolated)
    }

    fn build(
        family: Family,
        edges: Vec<Edge>,
        isolated: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut vertices: BTreeSet<VertexId> = isolated.into_iter().collect();
        for &e in &edges {
            if e.0 == e.1 {
                return Err(Error::SelfLoop(e.0));
            }
            let key = e.normalized();
            if !seen.insert(key) {
                return Err(Error::ParallelEdge(key.0, key.1));
            }
            vertices.insert(e.0);
            vertices.insert(e.1);
        }
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph {
            family,
            vertices: vertices.into_iter().collect(),
            edges,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Total vertex count.
    pub fn n(&self) -> u32 {
        self.vertices.len() as u32
    }

    /// Number of path vertices (`p_0` through `p_{l-1}`).
    pub fn l(&self) -> u32 {
        self.vertices.iter().filter(|v| !v.is_leaf()).count() as u32
    }

    /// Vertices in canonical order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.0 == v {
                Some(e.1)
            } else if e.1 == v {
                Some(e.0)
            } else {
                None
            }
        })
    }

    /// Degree of every vertex, indexed like [`Graph::vertices`].
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[self.index_of(e.0).unwrap()] += 1;
            deg[self.index_of(e.1).unwrap()] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> Result<u32> {
        self.degrees()
            .into_iter()
            .max()
            .map(|d| d as u32)
            .ok_or(Error::EmptyGraph)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = alloc::vec![Vec::new(); n];
        for e in &self.edges {
            let (a, b) = (self.index_of(e.0).unwrap(), self.index_of(e.1).unwrap());
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Edge set with endpoints normalized, for comparisons that ignore order.
    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges.iter().map(|e| e.normalized()).collect()
    }
}

/// `D(n, l)`: hub `p_0` joined to leaves `x_1..x_{n-l}` and to the path
/// `p_0 p_1 ... p_{l-1}`. Requires `l >= 2` and `n >= l + 1`.
pub fn dandelion(n: u32, l: u32) -> Result<Graph> {
    check_dandelion(n, l)?;
    let leaves = n - l;
    let edges = (1..=leaves)
        .map(|i| Edge(VertexId::HUB, VertexId::Leaf(i)))
        .chain((0..l - 1).map(|j| Edge(VertexId::PathNode(j), VertexId::PathNode(j + 1))))
        .collect();
    Graph::build(Family::Dandelion { n, l }, edges, [])
}

pub(crate) fn check_dandelion(n: u32, l: u32) -> Result<()> {
    if l < 2 {
        return Err(Error::TooSmall {
            param: "l",
            min: 2,
            got: l,
        });
    }
    if n <= l {
        return Err(Error::NoLeaves { n, l });
    }
    Ok(())
}

/// Star with center `p_0` and leaves `x_1..x_m`.
pub fn star(m: u32) -> Result<Graph> {
    if m < 1 {
        return Err(Error::TooSmall {
            param: "m",
            min: 1,
            got: m,
        });
    }
    let edges = (1..=m)
        .map(|i| Edge(VertexId::HUB, VertexId::Leaf(i)))
        .collect();
    Graph::build(Family::Star { leaves: m }, edges, [])
}

/// Path `p_0 .. p_{l-1}`.
pub fn path(l: u32) -> Result<Graph> {
    if l < 1 {
        return Err(Error::TooSmall {
            param: "l",
            min: 1,
            got: l,
        });
    }
    let edges = (0..l - 1)
        .map(|j| Edge(VertexId::PathNode(j), VertexId::PathNode(j + 1)))
        .collect();
    Graph::build(Family::Path { len: l }, edges, [VertexId::HUB])
}
