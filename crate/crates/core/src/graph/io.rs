//! `.graph` edge lists: a header line `n m`, then `m` lines `label1 label2`.
//!
//! Vertices are numbered by first appearance. Isolated vertices carry no
//! label in the format and come back as `_0`, `_1`, ...

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::Graph;
use crate::complex::Vertex;
use crate::error::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse {
            line: 1,
            msg: format!("bad header: {e}"),
        })?;
    let [n, m] = nums[..] else {
        return Err(Error::Parse {
            line: 1,
            msg: "header must be `n m`".into(),
        });
    };

    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = parts[..] else {
            return Err(Error::Parse {
                line: i + 1,
                msg: "expected `label1 label2`".into(),
            });
        };
        if a == b {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("self-loop at {a}"),
            });
        }
        let mut id = |l: &str| {
            *index.entry(l.to_string()).or_insert_with(|| {
                labels.push(l.to_string());
                (labels.len() - 1) as Vertex
            })
        };
        let (u, v) = (id(a), id(b));
        edges.push((u, v));
        if labels.len() > n {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("more than {n} distinct vertices"),
            });
        }
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let mut k = 0;
    while labels.len() < n {
        let l = format!("_{k}");
        if !index.contains_key(&l) {
            labels.push(l);
        }
        k += 1;
    }
    let mut g = Graph::with_labels(labels);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn read_graph_file(path: &Path) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn write_graph_file(g: &Graph, path: &Path) -> Result<()> {
    fs::write(path, write_graph(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = parse_graph("4 3\na b\nb c\nc a\n").unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.label(3), "_0");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn errors_have_lines() {
        assert!(matches!(parse_graph("3 1\na a\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\na b\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("2 2\na b\nb c\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("x\n"), Err(Error::Parse { line: 1, .. })));
    }
}
