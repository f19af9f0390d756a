//! Graphviz export. Uses the radial `twopi` layout rooted at the hub, so the
//! leaves fan out around `p0` and the path runs outward from it.

use std::fmt::Write;

use dandelion_core::{Family, Graph, Labeling, VertexId};

fn title(g: &Graph) -> String {
    match g.family() {
        Family::Dandelion { n, l } => format!("D({n},{l})"),
        Family::Star { leaves } => format!("S({leaves})"),
        Family::Path { len } => format!("P({len})"),
        Family::Custom => "G".to_string(),
    }
}

/// DOT document for `g`. With a labeling, vertices show their label and
/// edges their weight.
pub fn to_dot(g: &Graph, labeling: Option<&Labeling>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", title(g));
    out.push_str("  layout=twopi;\n  root=p0;\n  overlap=false;\n  node [shape=circle];\n");
    for &v in g.vertices() {
        let mut attrs = Vec::new();
        if let Some(a) = labeling.and_then(|lab| lab.get(v)) {
            attrs.push(format!("label=\"{v}\\n{a}\""));
        }
        if v == VertexId::HUB {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgray".into());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for &e in g.edges() {
        match labeling.and_then(|lab| lab.weight(e).ok()) {
            Some(w) => {
                let _ = writeln!(out, "  {} -- {} [label=\"{w}\"];", e.0, e.1);
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.0, e.1);
            }
        }
    }
    out.push_str("}\n");
    out
}
