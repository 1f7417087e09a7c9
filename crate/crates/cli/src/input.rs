//! Reading graphs: graph6 (one per line) and edge lists.

use std::fs;
use std::io::{self, Read};

use anyhow::{anyhow, bail, Context, Result};
use sgut_core::{graph6, Graph};

use crate::args::GraphFormat;

/// A graph read from input with a label for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputGraph {
    pub label: String,
    pub graph: Graph,
}

/// Reads `path` (or standard input for `-`).
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn parse_graphs(text: &str, format: GraphFormat) -> Result<Vec<InputGraph>> {
    let graphs = match format {
        GraphFormat::G6 => parse_graph6_lines(text)?,
        GraphFormat::Edgelist => vec![InputGraph {
            label: "edgelist".into(),
            graph: parse_edgelist(text)?,
        }],
    };
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    Ok(graphs)
}

/// One graph6 string per nonblank line; an optional `>>graph6<<` prefix is
/// accepted.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<InputGraph>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty())
        .map(|(lineno, line)| {
            let code = line.strip_prefix(">>graph6<<").unwrap_or(line);
            let graph = graph6::decode(code).with_context(|| format!("line {lineno}: `{code}`"))?;
            Ok(InputGraph {
                label: code.to_owned(),
                graph,
            })
        })
        .collect()
}

/// `n <order>` on the first non-comment line, then one `u v` pair per line
/// with 0-indexed vertices. `#` starts a comment anywhere on a line.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());
    let (lineno, header) = lines.next().ok_or_else(|| anyhow!("empty edge list"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", order] => order
            .parse::<usize>()
            .with_context(|| format!("line {lineno}: bad order `{order}`"))?,
        _ => bail!("line {lineno}: expected `n <order>`, got `{header}`"),
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let pair = match line.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => (u.parse::<usize>(), v.parse::<usize>()),
            _ => bail!("line {lineno}: expected `u v`, got `{line}`"),
        };
        match pair {
            (Ok(u), Ok(v)) => edges.push((u, v)),
            _ => bail!("line {lineno}: vertices must be nonnegative integers, got `{line}`"),
        }
    }
    Graph::from_edges(n, edges).context("invalid edge list")
}

/// Renders a graph as an edge list readable by [`parse_edgelist`].
pub fn format_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    let mut edges: Vec<_> = g.edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgelist_round_trip() {
        let text = "# a path\nn 4\n0 1\n1 2 # middle\n\n2 3\n";
        let g = parse_edgelist(text).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(parse_edgelist(&format_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn edgelist_errors() {
        for bad in [
            "",
            "# only\n",
            "4\n0 1\n",
            "n 4\n0\n",
            "n 4\n0 x\n",
            "n 3\n0 3\n",
            "n 3\n1 1\n",
        ] {
            assert!(parse_edgelist(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn graph6_batch() {
        let gs = parse_graph6_lines("A_\n\n>>graph6<<Dhc\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].label, "Dhc");
        let err = parse_graph6_lines("A_\nD\n").unwrap_err();
        assert!(format!("{err:#}").contains("line 2"));
    }
}
