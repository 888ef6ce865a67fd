//! JSON graph format and DOT export.
//!
//! ```text
//! {"n_vertices":N,"edges":[[a,b],...],"labels":{"0":"u0",...}}
//! ```
//!
//! Edges are written with `a < b`, sorted lexicographically, so serializing a
//! parsed canonical document reproduces it byte for byte. On input an
//! `"adjacency"` array of neighbor lists may replace `"edges"`.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n_vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<[Vertex; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    adjacency: Option<Vec<Vec<Vertex>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<Vertex, String>,
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(Error::from_json)?;
    let n = doc.n_vertices;
    let graph = match (doc.edges, doc.adjacency) {
        (Some(_), Some(_)) => {
            return Err(Error::parse_at("document", "give either \"edges\" or \"adjacency\", not both"))
        }
        (None, None) => return Err(Error::parse_at("document", "missing \"edges\"")),
        (Some(edges), None) => {
            let mut adjacency = vec![Vec::new(); n];
            for (i, &[a, b]) in edges.iter().enumerate() {
                let at = format!("edges[{i}]");
                if a >= n || b >= n {
                    return Err(Error::parse_at(at, format!("endpoint outside 0..{n}")));
                }
                if a == b {
                    return Err(Error::parse_at(at, format!("self-loop at {a}")));
                }
                if adjacency[a].contains(&b) {
                    return Err(Error::parse_at(at, format!("duplicate edge {{{a},{b}}}")));
                }
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
            Graph::from_adjacency(adjacency)?
        }
        (None, Some(adjacency)) => {
            if adjacency.len() != n {
                return Err(Error::parse_at(
                    "adjacency",
                    format!("{} lists for n_vertices = {n}", adjacency.len()),
                ));
            }
            for (u, list) in adjacency.iter().enumerate() {
                for (j, &v) in list.iter().enumerate() {
                    let at = format!("adjacency[{u}][{j}]");
                    if v >= n {
                        return Err(Error::parse_at(at, format!("neighbor {v} outside 0..{n}")));
                    }
                    if v == u {
                        return Err(Error::parse_at(at, "self-loop"));
                    }
                    if !adjacency[v].contains(&u) {
                        return Err(Error::parse_at(
                            at,
                            format!("asymmetric entry: {v} lists no {u}"),
                        ));
                    }
                    if list[..j].contains(&v) {
                        return Err(Error::parse_at(at, format!("duplicate neighbor {v}")));
                    }
                }
            }
            Graph::from_adjacency(adjacency)?
        }
    };
    if let Some((&v, _)) = doc.labels.iter().find(|(&v, _)| v >= n) {
        return Err(Error::parse_at(format!("labels.{v}"), "label for a nonexistent vertex"));
    }
    Ok(graph.with_labels(doc.labels))
}

pub fn serialize_graph(g: &Graph) -> String {
    let doc = GraphDoc {
        n_vertices: g.n_vertices(),
        edges: Some(g.edges().map(|(a, b)| [a, b]).collect()),
        adjacency: None,
        labels: g.labels().clone(),
    };
    let mut out = serde_json::to_string(&doc).expect("graph document serializes");
    out.push('\n');
    out
}

pub fn export_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n_vertices() {
        match g.label(v) {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\"")),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_example_graph, build_generalized_petersen, PetersenParams};

    #[test]
    fn round_trip_prism() {
        let g = build_generalized_petersen(PetersenParams::new(4, 1).unwrap());
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn round_trip_example() {
        let g = build_example_graph();
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_text() {
        let g = Graph::from_edges(3, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(serialize_graph(&g), "{\"n_vertices\":3,\"edges\":[[0,1],[1,2]]}\n");
    }

    #[test]
    fn asymmetric_adjacency_is_rejected() {
        let err = parse_graph(r#"{"n_vertices":3,"adjacency":[[1],[0,2],[]]}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("adjacency[1][1]") && msg.contains("asymmetric"), "{msg}");
    }

    #[test]
    fn bad_edges_report_their_position() {
        let err = parse_graph(r#"{"n_vertices":3,"edges":[[0,1],[1,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("edges[1]"), "{err}");
        let err = parse_graph(r#"{"n_vertices":3,"edges":[[0,1],[1,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
        let err = parse_graph(r#"{"n_vertices":2,"edges":[[0,5]]}"#).unwrap_err();
        assert!(err.to_string().contains("edges[0]"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let err = parse_graph("{\n  \"n_vertices\": 3,\n  \"edges\": [[0,1]\n}").unwrap_err();
        assert!(err.to_string().contains("line 4"), "{err}");
    }

    #[test]
    fn dot_export() {
        let g = build_generalized_petersen(PetersenParams::new(4, 1).unwrap());
        let dot = export_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("label=\"v3\""));
    }
}
