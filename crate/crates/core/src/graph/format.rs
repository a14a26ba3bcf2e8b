//! Line-oriented graph file format, version 1.
//!
//! ```text
//! # comment
//! vertex <id> [q=<int>]
//! edge <id> <vertex-id> <vertex-id> <length>
//! ```
//!
//! Lengths are `num/den` or decimal literals and are read exactly.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::PmGraph;
use crate::rational::{format_rational, parse_rational};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..pos],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

/// Parses graph-file content. The graph is returned exactly as written.
pub fn parse_graph(text: &str) -> Result<PmGraph> {
    let mut builder = PmGraph::builder();
    let mut vertex_ids = HashSet::new();
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim_start();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens = tokenize(raw);
        let syntax = |column: usize, message: String| Error::Syntax {
            line: line_no,
            column,
            message,
        };
        match tokens[0].text {
            "vertex" => {
                let id = tokens
                    .get(1)
                    .ok_or_else(|| syntax(raw.len() + 1, "expected vertex id".into()))?;
                let q = match tokens.get(2) {
                    None => 0,
                    Some(t) => {
                        let value = t
                            .text
                            .strip_prefix("q=")
                            .ok_or_else(|| syntax(t.column, format!("expected `q=<int>`, found `{}`", t.text)))?;
                        value
                            .parse::<u32>()
                            .map_err(|_| syntax(t.column + 2, format!("invalid weight `{value}`")))?
                    }
                };
                if let Some(extra) = tokens.get(3) {
                    return Err(syntax(extra.column, format!("unexpected `{}`", extra.text)));
                }
                if !vertex_ids.insert(id.text.to_string()) {
                    return Err(Error::DuplicateId(id.text.to_string()));
                }
                builder = builder.vertex(id.text, q);
            }
            "edge" => {
                if tokens.len() < 5 {
                    return Err(syntax(
                        raw.len() + 1,
                        "expected `edge <id> <vertex> <vertex> <length>`".into(),
                    ));
                }
                if let Some(extra) = tokens.get(5) {
                    return Err(syntax(extra.column, format!("unexpected `{}`", extra.text)));
                }
                let length = parse_rational(tokens[4].text).map_err(|_| {
                    syntax(tokens[4].column, format!("invalid length `{}`", tokens[4].text))
                })?;
                edges.push((
                    tokens[1].text.to_string(),
                    tokens[2].text.to_string(),
                    tokens[3].text.to_string(),
                    length,
                ));
            }
            other => {
                return Err(syntax(
                    tokens[0].column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    // Edges may precede the vertices they mention.
    for (id, u, v, length) in edges {
        builder = builder.edge(id, u, v, length);
    }
    builder.build()
}

/// Writes a graph in file format v1; `parse_graph(to_text(g)) == g`.
pub fn to_text(g: &PmGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if v.q == 0 {
            writeln!(out, "vertex {}", v.id).unwrap();
        } else {
            writeln!(out, "vertex {} q={}", v.id, v.q).unwrap();
        }
    }
    for e in g.edges() {
        writeln!(
            out,
            "edge {} {} {} {}",
            e.id,
            g.vertices()[e.u].id,
            g.vertices()[e.v].id,
            format_rational(&e.length)
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn parses_two_vertex_tree() {
        let g = parse_graph("vertex p q=1\nvertex q q=2\nedge e1 p q 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.q_sum(), 3);
    }

    #[test]
    fn parses_self_loop() {
        let g = parse_graph("vertex x q=2\nedge l x x 5").unwrap();
        assert!(g.edges()[0].is_loop());
        assert_eq!(g.edges()[0].length, int(5));
    }

    #[test]
    fn unknown_endpoint_is_an_error() {
        assert!(matches!(
            parse_graph("edge e a b 1"),
            Err(Error::UnknownEndpoint { .. })
        ));
    }

    #[test]
    fn comments_blank_lines_and_decimals() {
        let g = parse_graph("# theta\n\n  vertex x\nvertex y q=1\nedge a x y 0.25 \nedge b x y 2/6\n")
            .unwrap();
        assert_eq!(g.edges()[0].length, frac(1, 4));
        assert_eq!(g.edges()[1].length, frac(1, 3));
        assert_eq!(g.vertices()[0].q, 0);
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_graph("vertex x\nedge a x x one") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 12)),
            other => panic!("{other:?}"),
        }
        match parse_graph("vertex x w=2") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 10)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph("node x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_graph("edge a x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn duplicate_and_nonpositive_are_rejected() {
        assert!(matches!(
            parse_graph("vertex x\nvertex x"),
            Err(Error::DuplicateId(_))
        ));
        assert!(matches!(
            parse_graph("vertex x q=2\nedge a x x -1"),
            Err(Error::NonPositiveLength { .. })
        ));
        assert!(matches!(
            parse_graph("vertex x q=2\nedge a x x 0"),
            Err(Error::NonPositiveLength { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let text = "vertex x q=1\nvertex y\nedge a x y 3/2\nedge l y y 1/1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(to_text(&g), text);
    }
}
