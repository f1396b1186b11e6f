//! DOT and adjacency-JSON serializations of a divisor prime graph.
//!
//! Both list edges as unordered pairs `(u, v)` with `u < v`, sorted
//! ascending, and label vertices by their divisor values.

use std::fmt::Write;

use divprime_core::DivisorGraph;
use serde::{Deserialize, Serialize};

pub fn to_dot(graph: &DivisorGraph) -> String {
    let v = graph.vertices();
    let mut out = String::new();
    writeln!(out, "graph divisor_prime_{} {{", graph.n()).unwrap();
    for d in v {
        writeln!(out, "  {d};").unwrap();
    }
    for (i, j) in graph.edges() {
        writeln!(out, "  {} -- {};", v[i], v[j]).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The adjacency-JSON document. Integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyDocument {
    pub n: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl AdjacencyDocument {
    pub fn from_graph(graph: &DivisorGraph) -> Self {
        let v = graph.vertices();
        AdjacencyDocument {
            n: graph.n().to_string(),
            vertices: v.iter().map(ToString::to_string).collect(),
            edges: graph
                .edges()
                .map(|(i, j)| [v[i].to_string(), v[j].to_string()])
                .collect(),
        }
    }
}

pub fn to_adjacency_json(graph: &DivisorGraph) -> String {
    let mut s = serde_json::to_string(&AdjacencyDocument::from_graph(graph)).expect("serializable");
    s.push('\n');
    s
}
