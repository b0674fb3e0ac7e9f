//! JSON encodings of graphs, digraphs and vertex-set families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Digraph};
use crate::vset::VertexSet;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    #[serde(default)]
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    colors: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Serialize)]
struct DigraphDoc {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

/// Parses `{"n": int, "edges": [[u,v],...], "colors": {"Name": [indices],...}}`.
pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let mut g = ColoredGraph::from_edges(doc.n, &edges)?;
    for (name, members) in doc.colors {
        let set = VertexSet::try_from_indices(doc.n, members)
            .map_err(|vertex| Error::VertexOutOfRange { vertex, n: doc.n })?;
        g.set_color(name, set)?;
    }
    Ok(g)
}

/// Emits the graph with sorted edges (`u < v`) and sorted color members.
pub fn graph_to_json(g: &ColoredGraph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        colors: g
            .colors()
            .iter()
            .map(|(k, s)| (k.clone(), s.to_vec()))
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph document serializes")
}

/// `{"n": int, "arcs": [[u,v],...]}` with arcs in lexicographic order.
pub fn digraph_to_json(d: &Digraph) -> String {
    let doc = DigraphDoc {
        n: d.n(),
        arcs: d.arcs().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("digraph document serializes")
}

/// Parses a comma-separated vertex list such as `0,3,5` (empty string is the empty set).
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet> {
    let mut indices = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Error::BadParameter(format!("`{part}` is not a vertex index")))?;
        indices.push(v);
    }
    VertexSet::try_from_indices(n, indices).map_err(|vertex| Error::VertexOutOfRange { vertex, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_graph(r#"{"n":3,"edges":[[0,1],[1,2]],"colors":{}}"#).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            parse_graph(r#"{"n":2,"edges":[[0,0]],"colors":{}}"#),
            Err(Error::SelfLoop(0))
        );
    }

    #[test]
    fn merges_duplicates_and_reads_colors() {
        let g = parse_graph(r#"{"n":4,"edges":[[0,1],[1,0],[2,3]],"colors":{"A":[0]}}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.color("A").unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn malformed_and_out_of_range() {
        assert!(matches!(
            parse_graph(r#"{"edges":[]}"#),
            Err(Error::MalformedDocument(_))
        ));
        assert!(matches!(
            parse_graph(r#"{"n":-1}"#),
            Err(Error::MalformedDocument(_))
        ));
        assert_eq!(
            parse_graph(r#"{"n":2,"edges":[[0,5]]}"#),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        );
        assert_eq!(
            parse_graph(r#"{"n":2,"colors":{"B":[2]}}"#),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn emission_is_canonical() {
        let g = parse_graph(r#"{"n":4,"edges":[[3,2],[1,0]],"colors":{"Z":[3,1],"A":[2]}}"#).unwrap();
        assert_eq!(
            graph_to_json(&g),
            r#"{"n":4,"edges":[[0,1],[2,3]],"colors":{"A":[2],"Z":[1,3]}}"#
        );
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("0, 2", 3).unwrap().to_vec(), vec![0, 2]);
        assert!(parse_vertex_list("", 3).unwrap().is_empty());
        assert!(parse_vertex_list("x", 3).is_err());
        assert!(parse_vertex_list("3", 3).is_err());
    }
}
