//! Simple undirected graphs on `0..n` with a label per vertex.

mod io;
mod stable;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::complex::Vertex;
use crate::error::{Error, Result};

pub use io::{parse_graph, read_graph_file, write_graph, write_graph_file};
pub use stable::{
    alpha, alpha_exact, greedy_min_degree, link_recursive_stable, meets_root_bound, turan_bound, turan_stable, StableMethod,
    StableSetWitness, WitnessJson, DEFAULT_VERTEX_CAP,
};

#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
}

impl Graph {
    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as Vertex))
            .collect();
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels,
            index,
        }
    }

    /// Vertices labelled `"0"`, `"1"`, ...
    pub fn with_vertices(n: usize) -> Self {
        Self::with_labels((0..n).map(|i| i.to_string()).collect())
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    /// Adds `{u, v}`; self-loops are rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u as usize].insert(v as usize);
        self.adj[v as usize].insert(u as usize);
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].contains(v as usize)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].count_ones(..)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.num_vertices() as Vertex).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v as usize]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v as usize].ones().map(|u| u as Vertex)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.num_vertices() as Vertex)
            .flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_id(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_stable(&self, set: &[Vertex]) -> Result<bool> {
        let n = self.num_vertices();
        if let Some(&v) = set.iter().find(|&&v| v as usize >= n) {
            return Err(Error::InvalidInput(format!("vertex {v} out of range 0..{n}")));
        }
        let mut mask = FixedBitSet::with_capacity(n);
        for &v in set {
            mask.insert(v as usize);
        }
        Ok(set.iter().all(|&v| self.adj[v as usize].is_disjoint(&mask)))
    }

    /// Induced subgraph; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut g = Graph::with_labels(vertices.iter().map(|&v| self.labels[v as usize].clone()).collect());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i as Vertex, j as Vertex);
                }
            }
        }
        g
    }

    /// Graph join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let collide = other.labels.iter().any(|l| self.index.contains_key(l));
        let labels = if collide {
            self.labels
                .iter()
                .map(|l| format!("{l}#L"))
                .chain(other.labels.iter().map(|l| format!("{l}#R")))
                .collect()
        } else {
            self.labels.iter().chain(other.labels.iter()).cloned().collect()
        };
        let off = self.num_vertices() as Vertex;
        let mut g = Graph::with_labels(labels);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        for u in 0..off {
            for v in 0..other.num_vertices() as Vertex {
                g.add_edge(u, v + off);
            }
        }
        g
    }
}

impl PartialEq for Graph {
    /// Label-level equality: same label set and same labelled edges.
    fn eq(&self, other: &Self) -> bool {
        if self.num_vertices() != other.num_vertices() || self.edge_count() != other.edge_count() {
            return false;
        }
        let map: Option<Vec<Vertex>> = self.labels.iter().map(|l| other.vertex_id(l)).collect();
        let Some(map) = map else { return false };
        self.edges()
            .all(|(u, v)| other.has_edge(map[u as usize], map[v as usize]))
    }
}

impl Eq for Graph {}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n);
        for i in 0..n {
            g.add_edge(i as Vertex, ((i + 1) % n) as Vertex);
        }
        g
    }

    #[test]
    fn basic_queries() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_edge(4, 0));
        assert_eq!(g.edges().count(), 5);
        assert!(g.is_stable(&[0, 2]).unwrap());
        assert!(!g.is_stable(&[0, 1]).unwrap());
        assert!(g.is_stable(&[0, 9]).is_err());
    }

    #[test]
    fn join_graph() {
        let g = cycle(4).join(&cycle(4));
        assert_eq!(g.num_vertices(), 8);
        assert_eq!(g.edge_count(), 4 + 4 + 16);
        assert!(g.vertex_id("0#R").is_some());
    }

    #[test]
    fn label_equality_ignores_ids() {
        let mut a = Graph::with_labels(vec!["x".into(), "y".into(), "z".into()]);
        a.add_edge(0, 1);
        let mut b = Graph::with_labels(vec!["z".into(), "y".into(), "x".into()]);
        b.add_edge(2, 1);
        assert_eq!(a, b);
        b.add_edge(0, 1);
        assert_ne!(a, b);
    }
}
