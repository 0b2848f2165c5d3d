//! Indexed graph corpora: built-in exhaustive enumeration or graph6 files.
//!
//! Every corpus entry has a stable index so parallel workers can process
//! arbitrary slices and results can be merged back in order.

use std::path::Path;

use chromstab_core::graph::{ENUMERATION_DEFAULT_LIMIT, ENUMERATION_HARD_LIMIT};
use chromstab_core::{parse_graph6, Graph, LabeledGraphs};
use serde::Serialize;

use crate::error::{Error, Result};

/// Environment variable that raises the enumeration guard.
pub const MAX_N_ENV: &str = "CHROMSTAB_MAX_N";

/// A graph6 line that failed to parse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
enum Items {
    /// One enumerator per order, with the running offset of each.
    Enumerate(Vec<(u64, LabeledGraphs)>),
    /// `(line number, text)` for every non-comment line.
    Lines(Vec<(usize, String)>),
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct Corpus {
    description: String,
    items: Items,
    len: u64,
}

/// Enumeration guard: `CHROMSTAB_MAX_N` if set and valid, else 7.
pub fn enumeration_limit() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.clamp(1, ENUMERATION_HARD_LIMIT))
        .unwrap_or(ENUMERATION_DEFAULT_LIMIT)
}

impl Corpus {
    /// All labeled graphs with `min_n <= n <= max_n` vertices, ordered by
    /// `n` and then by edge mask.
    pub fn enumerate(min_n: usize, max_n: usize, limit: usize) -> Result<Corpus> {
        if min_n == 0 || min_n > max_n {
            return Err(Error::Usage(format!("invalid order range {min_n}..={max_n}")));
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for n in min_n..=max_n {
            let gen = LabeledGraphs::with_limit(n, limit)?;
            let total = gen.total();
            parts.push((offset, gen));
            offset += total;
        }
        let description = if min_n == max_n {
            format!("all labeled graphs on {max_n} vertices")
        } else {
            format!("all labeled graphs on {min_n}..={max_n} vertices")
        };
        Ok(Corpus { description, items: Items::Enumerate(parts), len: offset })
    }

    /// Reads a graph6 file. Blank lines and lines starting with `#` or `>`
    /// are skipped, except that a `>>graph6<<` header followed by a graph
    /// on the same line keeps the graph.
    pub fn graph6_file(path: &Path) -> Result<Corpus> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::graph6_text(&text, format!("graph6 file {}", path.display())))
    }

    pub fn graph6_text(text: &str, description: String) -> Corpus {
        let lines: Vec<(usize, String)> = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let line = raw.trim();
                let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
                if line.is_empty() || line.starts_with('#') || line.starts_with('>') {
                    None
                } else {
                    Some((i + 1, line.to_string()))
                }
            })
            .collect();
        let len = lines.len() as u64;
        Corpus { description, items: Items::Lines(lines), len }
    }

    pub fn from_graphs(graphs: Vec<Graph>, description: String) -> Corpus {
        let len = graphs.len() as u64;
        Corpus { description, items: Items::Graphs(graphs), len }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry `index`, `0 <= index < len()`.
    pub fn get(&self, index: u64) -> std::result::Result<Graph, ParseFailure> {
        match &self.items {
            Items::Enumerate(parts) => {
                let pos = parts.partition_point(|(offset, _)| *offset <= index) - 1;
                let (offset, gen) = &parts[pos];
                Ok(gen.graph_at(index - offset))
            }
            Items::Lines(lines) => {
                let (line, text) = &lines[index as usize];
                parse_graph6(text).map_err(|e| ParseFailure { line: *line, message: e.to_string() })
            }
            Items::Graphs(graphs) => Ok(graphs[index as usize].clone()),
        }
    }

    /// Largest order of any parseable entry (0 for an empty corpus).
    pub fn max_order(&self) -> usize {
        match &self.items {
            Items::Enumerate(parts) => parts.last().map_or(0, |(_, g)| g.order()),
            Items::Lines(_) => {
                (0..self.len).filter_map(|i| self.get(i).ok()).map(|g| g.n()).max().unwrap_or(0)
            }
            Items::Graphs(graphs) => graphs.iter().map(Graph::n).max().unwrap_or(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_indexes_across_orders() {
        let c = Corpus::enumerate(1, 4, 7).unwrap();
        assert_eq!(c.len(), 1 + 2 + 8 + 64);
        assert_eq!(c.get(0).unwrap().n(), 1);
        assert_eq!(c.get(1).unwrap().n(), 2);
        assert_eq!(c.get(2).unwrap().edge_count(), 1);
        assert_eq!(c.get(3).unwrap().n(), 3);
        assert_eq!(
            c.get(74).unwrap(),
            chromstab_core::constructions::standard_graph(
                chromstab_core::constructions::StandardKind::Complete,
                4
            )
            .unwrap()
        );
        assert_eq!(c.max_order(), 4);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(Corpus::enumerate(8, 8, 7), Err(Error::Graph(_))));
        assert!(Corpus::enumerate(0, 3, 7).is_err());
        assert!(Corpus::enumerate(8, 8, 8).is_ok());
    }

    #[test]
    fn graph6_text_skips_comments_and_reports_bad_lines() {
        let text = ">>graph6<<\n# comment\nBw\n\nA_\nB!\n>>graph6<<@\n";
        let c = Corpus::graph6_text(text, "test".into());
        assert_eq!(c.len(), 4);
        assert_eq!(c.get(0).unwrap().edge_count(), 3);
        assert_eq!(c.get(1).unwrap().n(), 2);
        let bad = c.get(2).unwrap_err();
        assert_eq!(bad.line, 6);
        assert_eq!(c.get(3).unwrap().n(), 1);
        assert_eq!(c.max_order(), 3);
    }
}
