//! Plain-text edge lists.
//!
//! ```text
//! # a triangle
//! 3 3
//! 0 1
//! 1 2
//! 0 2
//! ```
//!
//! The first data line is `n m`, followed by `m` lines `u v` with 0-based
//! vertices. Anything after `#` on a line is a comment; blank lines are
//! ignored.

use std::fmt::Write;

use chromstab_core::Graph;

use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) =
        lines.next().ok_or(Error::Parse { line: 0, message: "missing \"n m\" header".into() })?;
    let [n, m] = numbers(line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::Parse { line, message: format!("more than the declared {m} edges") });
        }
        let [u, v] = numbers(line, body)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn numbers(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, message: format!("expected two integers, got {text:?}") });
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse { line, message: format!("not a non-negative integer: {s:?}") })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# triangle\n3 3\n\n0 1 # first\n1 2\n2 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
    }

    #[test]
    fn writes_then_reads() {
        let g = Graph::from_edge_list(5, &[(0, 4), (1, 2), (3, 4)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "5 3\n0 4\n1 2\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(Error::Graph(chromstab_core::Error::VertexOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(Error::Graph(chromstab_core::Error::DuplicateEdge { .. }))
        ));
    }
}
