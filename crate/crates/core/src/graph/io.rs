//! DIMACS edge format (1-indexed) and DOT export.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: malformed header: {detail}")]
    MalformedHeader { line: usize, detail: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("line {line}: malformed edge line `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: unexpected line `{text}`")]
    UnexpectedLine { line: usize, text: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Comment lines, without the leading `c`.
    pub comments: Vec<String>,
    /// Set when the input listed some edge more than once.
    pub duplicate_edges: bool,
}

/// Parses the DIMACS edge format. Accepts `p edge n m` and `p col n m`
/// headers; duplicate edges are collapsed, self-loops are rejected.
pub fn read_dimacs_graph(text: &str) -> Result<ParsedGraph, DimacsError> {
    let mut graph: Option<Graph> = None;
    let mut comments = Vec::new();
    let mut duplicate_edges = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("c") => {
                comments.push(trimmed[1..].trim_start().to_string());
            }
            Some("p") => {
                if graph.is_some() {
                    return Err(DimacsError::MalformedHeader {
                        line,
                        detail: "duplicate header".into(),
                    });
                }
                let fields: Vec<&str> = tokens.collect();
                let [kind, n, m] = fields[..] else {
                    return Err(DimacsError::MalformedHeader {
                        line,
                        detail: format!("expected `p edge <n> <m>`, found `{trimmed}`"),
                    });
                };
                if kind != "edge" && kind != "col" {
                    return Err(DimacsError::MalformedHeader {
                        line,
                        detail: format!("unknown format `{kind}`"),
                    });
                }
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| DimacsError::MalformedHeader {
                        line,
                        detail: format!("`{s}` is not a count"),
                    })
                };
                let n = parse(n)?;
                parse(m)?;
                graph = Some(Graph::try_new(n)?);
            }
            Some("e") => {
                let g = graph.as_mut().ok_or(DimacsError::MissingHeader)?;
                let fields: Vec<&str> = tokens.collect();
                let malformed = || DimacsError::MalformedEdge {
                    line,
                    text: trimmed.to_string(),
                };
                let [u, v] = fields[..] else {
                    return Err(malformed());
                };
                let u: usize = u.parse().map_err(|_| malformed())?;
                let v: usize = v.parse().map_err(|_| malformed())?;
                let n = g.n();
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(DimacsError::VertexOutOfRange { line, vertex: w, n });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, vertex: u });
                }
                if !g.try_add_edge(u - 1, v - 1)? {
                    duplicate_edges = true;
                }
            }
            _ => {
                return Err(DimacsError::UnexpectedLine {
                    line,
                    text: trimmed.to_string(),
                })
            }
        }
    }

    Ok(ParsedGraph {
        graph: graph.ok_or(DimacsError::MissingHeader)?,
        comments,
        duplicate_edges,
    })
}

/// Canonical DIMACS text: the header, then one `e u v` line per edge with
/// `u < v`, 1-indexed, in lexicographic order. Comments are never written.
pub fn write_dimacs_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 + edges.len() * 10);
    writeln!(out, "p edge {} {}", g.n(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Graphviz export with 0-indexed vertex names.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn reads_k2() {
        let p = read_dimacs_graph("p edge 2 1\ne 1 2").unwrap();
        assert_eq!(p.graph, complete_graph(2));
        assert!(!p.duplicate_edges);
    }

    #[test]
    fn writer_is_canonical() {
        let text = "c hello\np edge 3 3\ne 3 1\ne 2 1\n\ne 2 3\ne 1 2\n";
        let p = read_dimacs_graph(text).unwrap();
        assert!(p.duplicate_edges);
        assert_eq!(p.comments, vec!["hello".to_string()]);
        let w = write_dimacs_graph(&p.graph);
        assert_eq!(w, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        let again = write_dimacs_graph(&read_dimacs_graph(&w).unwrap().graph);
        assert_eq!(w, again);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            read_dimacs_graph("p edge 2 1\ne 1 1"),
            Err(DimacsError::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            read_dimacs_graph("p edge 2 1\ne 1 3"),
            Err(DimacsError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            read_dimacs_graph("p edge 2 1\ne 0 1"),
            Err(DimacsError::VertexOutOfRange { vertex: 0, .. })
        ));
        assert!(matches!(
            read_dimacs_graph("p edge x 1"),
            Err(DimacsError::MalformedHeader { .. })
        ));
        assert!(matches!(
            read_dimacs_graph("p cnf 2 1"),
            Err(DimacsError::MalformedHeader { .. })
        ));
        assert!(matches!(read_dimacs_graph("e 1 2"), Err(DimacsError::MissingHeader)));
        assert!(matches!(read_dimacs_graph("c only"), Err(DimacsError::MissingHeader)));
        assert!(matches!(
            read_dimacs_graph("p edge 2 1\ne 1"),
            Err(DimacsError::MalformedEdge { .. })
        ));
        assert!(matches!(read_dimacs_graph("p edge 5000 0"), Err(DimacsError::Graph(_))));
    }

    #[test]
    fn empty_graph_round_trip() {
        let g = Graph::new(0);
        assert_eq!(write_dimacs_graph(&g), "p edge 0 0\n");
        assert_eq!(read_dimacs_graph("p edge 0 0\n").unwrap().graph, g);
    }

    #[test]
    fn dot_output() {
        let dot = write_dot(&complete_graph(2), "k2");
        assert_eq!(dot, "graph k2 {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
