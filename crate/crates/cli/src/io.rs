//! Graph files: the JSON edge list used for input and output, and DOT export.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use edgereg_core::{Error, Graph};
use serde::{Deserialize, Serialize};

/// `{"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[1,5]]}` with 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Rejects labels outside `1..=n`, loops, and repeated edges.
    pub fn to_graph(&self) -> Result<Graph, Error> {
        let mut seen = BTreeSet::new();
        for &[u, v] in &self.edges {
            if u == v || u == 0 || v == 0 || u > self.n || v > self.n {
                return Err(Error::InvalidEdge(u, v));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!(
                    "edge {{{u},{v}}} is listed twice"
                )));
            }
        }
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &pairs)
    }
}

pub fn parse_graph(text: &str) -> anyhow::Result<Graph> {
    let file: GraphFile = serde_json::from_str(text).context("malformed graph JSON")?;
    Ok(file.to_graph()?)
}

pub fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("in {}", path.display()))
}

/// One line of compact JSON plus a newline.
pub fn graph_json(g: &Graph) -> String {
    let mut s = serde_json::to_string(&GraphFile::from_graph(g)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn write_graph(path: &Path, g: &Graph) -> anyhow::Result<()> {
    std::fs::write(path, graph_json(g)).with_context(|| format!("cannot write {}", path.display()))
}

/// Undirected DOT with vertices named `x1..xn`.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 1..=g.n() {
        let _ = writeln!(s, "  x{v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  x{u} -- x{v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        let g = parse_graph(r#"{"n": 3, "edges": [[1,2],[3,2]]}"#).unwrap();
        assert_eq!(g.edges(), [(1, 2), (2, 3)]);
        assert_eq!(graph_json(&g), "{\"n\":3,\"edges\":[[1,2],[2,3]]}\n");
        assert!(parse_graph(r#"{"n": 3, "edges": [[1,1]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 3, "edges": [[1,4]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 3, "edges": [[1,2],[2,1]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 3, "edges": [[1,2,3]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 3}"#).is_err());
        assert!(parse_graph("not json").is_err());
    }

    #[test]
    fn dot_for_an_edge() {
        let g = parse_graph(r#"{"n": 2, "edges": [[1,2]]}"#).unwrap();
        assert_eq!(to_dot(&g), "graph G {\n  x1;\n  x2;\n  x1 -- x2;\n}\n");
    }
}
