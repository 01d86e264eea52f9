// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! JSON graph documents and Graphviz export.
//!
//! A document looks like
//!
//! ```json
//! {
//!   "n": 3,
//!   "partite": { "S": [0, 1], "T": [2] },
//!   "base_edges": [[0, 2], [1, 2]],
//!   "added_edges": [[0, 1]],
//!   "colorings": { "c1": [1, 2, 3] },
//!   "k": 3
//! }
//! ```
//!
//! Without `partite` the graph is plain and `added_edges` must be empty.
//! Colors are 1-based.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ensure_proper, Coloring, Graph, PartitionedGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partite {
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    #[serde(rename = "T")]
    pub t: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partite: Option<Partite>,
    #[serde(default)]
    pub base_edges: Vec<[Vertex; 2]>,
    #[serde(default)]
    pub added_edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub colorings: BTreeMap<String, Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// A validated document body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedGraph {
    Plain(Graph),
    Partitioned(PartitionedGraph),
}

impl ParsedGraph {
    pub fn graph(&self) -> &Graph {
        match self {
            ParsedGraph::Plain(g) => g,
            ParsedGraph::Partitioned(pg) => pg.graph(),
        }
    }

    pub fn partitioned(&self) -> Option<&PartitionedGraph> {
        match self {
            ParsedGraph::Plain(_) => None,
            ParsedGraph::Partitioned(pg) => Some(pg),
        }
    }
}

fn pairs(edges: &[[Vertex; 2]]) -> Vec<(Vertex, Vertex)> {
    edges.iter().map(|&[u, v]| (u, v)).collect()
}

fn arrays(edges: &[(Vertex, Vertex)]) -> Vec<[Vertex; 2]> {
    edges.iter().map(|&(u, v)| [u, v]).collect()
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            n: g.n(),
            partite: None,
            base_edges: arrays(&g.edges()),
            added_edges: Vec::new(),
            colorings: BTreeMap::new(),
            k: None,
        }
    }

    pub fn from_partitioned(pg: &PartitionedGraph) -> Self {
        GraphDocument {
            n: pg.n(),
            partite: Some(Partite {
                s: pg.side_s().to_vec(),
                t: pg.side_t().to_vec(),
            }),
            base_edges: arrays(pg.base_edges()),
            added_edges: arrays(pg.added_edges()),
            colorings: BTreeMap::new(),
            k: None,
        }
    }

    /// Adds a named coloring and records its palette size.
    pub fn with_coloring(mut self, name: &str, c: &Coloring) -> Self {
        self.k = Some(c.k());
        self.colorings.insert(name.to_string(), c.colors());
        self
    }

    /// Parses and validates a document.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("malformed graph document: {e}")))?;
        doc.build()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Builds the graph, checking every structural invariant and that each
    /// stored coloring is a proper coloring within the palette.
    pub fn build(&self) -> Result<ParsedGraph> {
        let parsed = match &self.partite {
            Some(p) => ParsedGraph::Partitioned(PartitionedGraph::new(
                self.n,
                &p.s,
                &p.t,
                &pairs(&self.base_edges),
                &pairs(&self.added_edges),
            )?),
            None => {
                if !self.added_edges.is_empty() {
                    return Err(Error::input("added_edges requires a partite section"));
                }
                ParsedGraph::Plain(Graph::from_edges(self.n, &pairs(&self.base_edges))?)
            }
        };
        for name in self.colorings.keys() {
            let c = self.coloring(name)?;
            ensure_proper(parsed.graph(), &c)
                .map_err(|e| Error::input(format!("coloring {name:?}: {e}")))?;
        }
        Ok(parsed)
    }

    /// A stored coloring. The palette is `k` if given, else the largest color
    /// used.
    pub fn coloring(&self, name: &str) -> Result<Coloring> {
        let colors = self
            .colorings
            .get(name)
            .ok_or_else(|| Error::input(format!("no coloring named {name:?}")))?;
        if colors.len() != self.n {
            return Err(Error::input(format!(
                "coloring {name:?} has {} entries, expected {}",
                colors.len(),
                self.n
            )));
        }
        let k = self
            .k
            .unwrap_or_else(|| colors.iter().copied().max().unwrap_or(1) as usize);
        Coloring::new(k, colors).map_err(|e| Error::input(format!("coloring {name:?}: {e}")))
    }
}

/// Parses a document and returns it together with its validated graph.
pub fn parse_graph(text: &str) -> Result<(GraphDocument, ParsedGraph)> {
    let doc = GraphDocument::parse(text)?;
    let parsed = doc.build()?;
    Ok((doc, parsed))
}

/// Fill colors for colors 1..=12.
pub const DOT_PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
    "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DotExport {
    pub text: String,
    pub warning: Option<String>,
}

/// Renders a Graphviz undirected graph. Added edges of a partitioned graph
/// are drawn bold; a coloring becomes node fill colors when it fits the
/// palette and is otherwise dropped with a warning.
pub fn export_dot(g: &Graph, pg: Option<&PartitionedGraph>, c: Option<&Coloring>) -> DotExport {
    let mut warning = None;
    let c = match c {
        Some(c) if c.k() > DOT_PALETTE.len() => {
            warning = Some(format!(
                "palette of {} colors exceeds the {} available fill colors; nodes left unfilled",
                c.k(),
                DOT_PALETTE.len()
            ));
            None
        }
        Some(c) if c.len() != g.n() => {
            warning = Some("coloring size does not match the graph; nodes left unfilled".into());
            None
        }
        other => other,
    };

    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        match c {
            Some(c) => {
                let color = c.get(v);
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{v}:{color}\", style=filled, fillcolor=\"{}\"];",
                    DOT_PALETTE[color as usize - 1]
                );
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    if let Some(pg) = pg {
        for (name, side) in [("S", pg.side_s()), ("T", pg.side_t())] {
            let members: Vec<String> = side.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                out,
                "  subgraph side_{name} {{ rank=same; {} }}",
                members.join("; ")
            );
        }
    }
    for (u, v) in g.edges() {
        let bold = pg.is_some_and(|pg| pg.added_edges().binary_search(&(u, v)).is_ok());
        if bold {
            let _ = writeln!(out, "  {u} -- {v} [style=bold, penwidth=3];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    DotExport { text: out, warning }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_partitioned_document() {
        let text = r#"{"n":2,"partite":{"S":[0],"T":[1]},"base_edges":[[0,1]]}"#;
        let (doc, parsed) = parse_graph(text).unwrap();
        assert_eq!(doc.n, 2);
        assert_eq!(parsed.partitioned().unwrap().base_edges(), [(0, 1)]);
    }

    #[test]
    fn crossing_added_edge_is_named() {
        let text = r#"{"n":2,"partite":{"S":[0],"T":[1]},"added_edges":[[0,1]]}"#;
        let err = parse_graph(text).unwrap_err().to_string();
        assert!(err.contains("[0, 1]"), "{err}");
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let text = r#"{"n":2,"base_edges":[[0,1],[1,0]]}"#;
        let err = parse_graph(text).unwrap_err().to_string();
        assert!(err.contains("duplicate"), "{err}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_graph("{\n  \"n\": 2,\n  \"base_edges\": [[0, 1]\n}")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line"), "{err}");
        assert!(parse_graph(r#"{"n":2,"edges":[]}"#).is_err());
        assert!(parse_graph(r#"{"n":2,"base_edges":[[0,5]]}"#).is_err());
    }

    #[test]
    fn colorings_are_validated() {
        assert!(
            parse_graph(r#"{"n":2,"base_edges":[[0,1]],"colorings":{"a":[1,1]},"k":2}"#).is_err()
        );
        assert!(
            parse_graph(r#"{"n":2,"base_edges":[[0,1]],"colorings":{"a":[1,3]},"k":2}"#).is_err()
        );
        assert!(
            parse_graph(r#"{"n":2,"base_edges":[[0,1]],"colorings":{"a":[1]},"k":2}"#).is_err()
        );
        let (doc, _) =
            parse_graph(r#"{"n":2,"base_edges":[[0,1]],"colorings":{"a":[2,1]},"k":3}"#).unwrap();
        let c = doc.coloring("a").unwrap();
        assert_eq!((c.k(), c.colors()), (3, vec![2, 1]));
        assert!(doc.coloring("b").is_err());
    }

    #[test]
    fn added_edges_need_partite() {
        assert!(parse_graph(r#"{"n":2,"added_edges":[[0,1]]}"#).is_err());
    }

    #[test]
    fn document_round_trip() {
        let pg = PartitionedGraph::new(3, &[0, 1], &[2], &[(0, 2), (1, 2)], &[(0, 1)]).unwrap();
        let c = Coloring::new(3, &[1, 2, 3]).unwrap();
        let doc = GraphDocument::from_partitioned(&pg).with_coloring("c1", &c);
        let back = GraphDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.build().unwrap(), ParsedGraph::Partitioned(pg));
    }

    #[test]
    fn dot_single_edge_colored() {
        let g = Graph::path(2);
        let c = Coloring::new(2, &[1, 2]).unwrap();
        let dot = export_dot(&g, None, Some(&c));
        assert_eq!(dot.text.matches("fillcolor").count(), 2);
        assert_eq!(dot.text.matches(" -- ").count(), 1);
        assert!(dot.text.contains(DOT_PALETTE[0]) && dot.text.contains(DOT_PALETTE[1]));
        assert!(dot.warning.is_none());
    }

    #[test]
    fn dot_bold_added_edges() {
        let pg = PartitionedGraph::new(3, &[0, 1], &[2], &[(0, 2), (1, 2)], &[(0, 1)]).unwrap();
        let dot = export_dot(pg.graph(), Some(&pg), None);
        assert!(dot.text.contains("0 -- 1 [style=bold"));
        assert!(dot.text.contains("0 -- 2;"));
        assert!(!dot.text.contains("fillcolor"));
    }

    #[test]
    fn dot_palette_overflow_falls_back() {
        let g = Graph::empty(1);
        let c = Coloring::new(13, &[13]).unwrap();
        let dot = export_dot(&g, None, Some(&c));
        assert!(dot.warning.is_some());
        assert!(!dot.text.contains("fillcolor"));
    }
}
