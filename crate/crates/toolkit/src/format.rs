//! JSON documents for graphs, labelings, verifier reports, constructions and
//! solver results.
//!
//! Vertices are written by name (`x3`, `p0`). Label maps list leaves first,
//! then path nodes, each by index. All writers produce pretty-printed JSON
//! with a trailing newline, and the same value always serializes to the same
//! bytes.

use std::collections::{BTreeMap, BTreeSet};

use dandelion_core::solver::AttemptOutcome;
use dandelion_core::{
    dandelion, path, star, Collision, ConstructionResult, Edge, EsResult, EsStatus, Family, Graph,
    Labeling, VerifyReport, VertexId,
};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

fn name(v: VertexId) -> String {
    v.to_string()
}

fn edge_pair(e: Edge) -> [String; 2] {
    [name(e.0), name(e.1)]
}

#[derive(Serialize)]
struct GraphOut<'a> {
    family: &'a str,
    n: u32,
    l: u32,
    edges: Vec<[String; 2]>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let family = match g.family() {
        Family::Dandelion { .. } => "dandelion",
        Family::Star { .. } => "star",
        Family::Path { .. } => "path",
        Family::Custom => "custom",
    };
    to_pretty(&GraphOut {
        family,
        n: g.n(),
        l: g.l(),
        edges: g.edges().iter().map(|&e| edge_pair(e)).collect(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphIn {
    family: String,
    n: u32,
    l: u32,
    edges: Vec<[String; 2]>,
}

/// Parses a graph document. The edge list must describe exactly the family
/// member named by `family`, `n` and `l` (in any order).
pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    let doc: GraphIn = serde_json::from_str(text)?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, [a, b]) in doc.edges.iter().enumerate() {
        let parse = |s: &str, j: usize| {
            s.parse::<VertexId>()
                .map_err(|e| field_error(format!("edges[{i}][{j}]"), e.to_string()))
        };
        edges.push(Edge(parse(a, 0)?, parse(b, 1)?));
    }
    let expected = match doc.family.as_str() {
        "dandelion" => dandelion(doc.n, doc.l),
        "star" if doc.l == 1 => star(doc.n.saturating_sub(1)),
        "star" => return Err(field_error("l", "a star has l = 1")),
        "path" if doc.n == doc.l => path(doc.l),
        "path" => return Err(field_error("l", "a path has l = n")),
        "custom" => {
            return Graph::from_edges(edges, []).map_err(|e| field_error("edges", e.to_string()))
        }
        other => return Err(field_error("family", format!("unknown family {other:?}"))),
    }
    .map_err(|e| field_error("n", e.to_string()))?;
    let given: BTreeSet<_> = edges.iter().map(|e| e.normalized()).collect();
    if given.len() != edges.len() || given != expected.edge_set() {
        return Err(field_error(
            "edges",
            format!("do not match {} n={} l={}", doc.family, doc.n, doc.l),
        ));
    }
    Ok(expected)
}

struct LabelMap<'a>(&'a Labeling);

impl Serialize for LabelMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, a) in self.0.iter() {
            map.serialize_entry(&name(v), &a)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct LabelingOut<'a> {
    k: u32,
    labels: LabelMap<'a>,
}

fn labeling_out(lab: &Labeling) -> LabelingOut<'_> {
    LabelingOut {
        k: lab.k(),
        labels: LabelMap(lab),
    }
}

pub fn labeling_to_json(lab: &Labeling) -> String {
    to_pretty(&labeling_out(lab))
}

/// Parses `{"k": .., "labels": {..}}`. A document that carries the labeling
/// under a top-level `"labeling"` key, such as the output of `label`, is
/// accepted too.
pub fn labeling_from_json(text: &str) -> Result<Labeling, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    let (doc, prefix) = match value.get("labeling") {
        Some(inner) => (inner, "labeling."),
        None => (&value, ""),
    };
    let obj = doc
        .as_object()
        .ok_or_else(|| field_error(prefix.trim_end_matches('.'), "expected an object"))?;
    let k = obj
        .get("k")
        .ok_or_else(|| field_error(format!("{prefix}k"), "missing"))?;
    let k = as_u32(k).ok_or_else(|| {
        field_error(
            format!("{prefix}k"),
            "expected a non-negative 32-bit integer",
        )
    })?;
    let labels = obj
        .get("labels")
        .ok_or_else(|| field_error(format!("{prefix}labels"), "missing"))?
        .as_object()
        .ok_or_else(|| field_error(format!("{prefix}labels"), "expected an object"))?;
    let mut out = BTreeMap::new();
    for (key, value) in labels {
        let field = format!("{prefix}labels.{key}");
        let v: VertexId = key
            .parse()
            .map_err(|e: dandelion_core::Error| field_error(&field, e.to_string()))?;
        let a = as_u32(value)
            .ok_or_else(|| field_error(&field, "expected a non-negative 32-bit integer"))?;
        out.insert(v, a);
    }
    Ok(Labeling::from_pairs(k, out))
}

fn as_u32(v: &Value) -> Option<u32> {
    v.as_u64().and_then(|x| u32::try_from(x).ok())
}

#[derive(Serialize)]
struct OutOfRange {
    vertex: String,
    label: u32,
}

#[derive(Serialize)]
struct CollisionOut {
    first: [String; 2],
    second: [String; 2],
    weight: u64,
}

impl From<&Collision> for CollisionOut {
    fn from(c: &Collision) -> Self {
        CollisionOut {
            first: edge_pair(c.first),
            second: edge_pair(c.second),
            weight: c.weight,
        }
    }
}

#[derive(Serialize)]
struct ReportOut {
    valid: bool,
    out_of_range: Vec<OutOfRange>,
    collisions: Vec<CollisionOut>,
    weights: Vec<u64>,
}

fn report_out(r: &VerifyReport) -> ReportOut {
    ReportOut {
        valid: r.valid,
        out_of_range: r
            .out_of_range
            .iter()
            .map(|&(v, label)| OutOfRange {
                vertex: name(v),
                label,
            })
            .collect(),
        collisions: r.collisions.iter().map(CollisionOut::from).collect(),
        weights: r.weights.clone(),
    }
}

pub fn report_to_json(r: &VerifyReport) -> String {
    to_pretty(&report_out(r))
}

#[derive(Serialize)]
struct ConstructionOut<'a> {
    n: u32,
    l: u32,
    case: &'static str,
    claimed_k: u32,
    repaired: bool,
    labeling: LabelingOut<'a>,
    report: ReportOut,
}

pub fn construction_to_json(c: &ConstructionResult) -> String {
    to_pretty(&ConstructionOut {
        n: c.n,
        l: c.l,
        case: c.case.name(),
        claimed_k: c.claimed_k,
        repaired: c.repaired,
        labeling: labeling_out(&c.labeling),
        report: report_out(&c.report),
    })
}

#[derive(Serialize)]
struct AttemptOut {
    k: u32,
    outcome: &'static str,
    nodes: u64,
}

#[derive(Serialize)]
struct EsOut<'a> {
    n: u32,
    l: u32,
    status: &'static str,
    k: u32,
    lower_bound: u32,
    nodes_explored: u64,
    k_range_checked: [u32; 2],
    attempts: Vec<AttemptOut>,
    witness: Option<LabelingOut<'a>>,
}

pub fn es_to_json(g: &Graph, r: &EsResult) -> String {
    let (status, k, witness) = match &r.status {
        EsStatus::Exact { k, witness } => ("exact", *k, Some(labeling_out(witness))),
        EsStatus::InfeasibleAt { k } => ("infeasible", *k, None),
        EsStatus::Unknown { k } => ("unknown", *k, None),
    };
    to_pretty(&EsOut {
        n: g.n(),
        l: g.l(),
        status,
        k,
        lower_bound: r.lower_bound,
        nodes_explored: r.nodes_explored,
        k_range_checked: [r.k_range_checked.0, r.k_range_checked.1],
        attempts: r
            .attempts
            .iter()
            .map(|a| AttemptOut {
                k: a.k,
                outcome: match a.outcome {
                    AttemptOutcome::Feasible => "feasible",
                    AttemptOutcome::Infeasible => "infeasible",
                    AttemptOutcome::Unknown => "unknown",
                },
                nodes: a.nodes,
            })
            .collect(),
        witness,
    })
}
