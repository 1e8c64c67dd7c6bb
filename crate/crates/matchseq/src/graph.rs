//! Simple graphs on vertex set `0..n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
///
/// Serializes as a two-element array `[u, v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub u32, pub u32);

impl Edge {
    /// Canonicalizes the endpoint order. Loops are representable but are
    /// rejected by [`Graph::new`].
    pub fn new(a: u32, b: u32) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn endpoints(&self) -> [u32; 2] {
        [self.0, self.1]
    }

    pub fn touches(&self, v: u32) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

/// A simple graph: `n` vertices (`0..n`) and a duplicate-free list of
/// edges held in canonical (lexicographically sorted) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from an edge list, canonicalizing the edge order.
    /// Rejects loops, duplicate edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|e| Edge::new(e.0, e.1)).collect();
        for e in &edges {
            if e.0 == e.1 {
                return Err(Error::InvalidInput(format!("loop at vertex {}", e.0)));
            }
            if e.1 as usize >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({}, {}) out of range for n={n}",
                    e.0, e.1
                )));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate edge".into()));
        }
        Ok(Graph { n, edges })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push(Edge(u, v));
            }
        }
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.0 as usize] += 1;
            deg[e.1 as usize] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Every vertex has degree at most `r`.
    pub fn is_at_most_regular(&self, r: usize) -> bool {
        self.max_degree() <= r
    }

    /// Relabels vertices through `perm` (a permutation of `0..n`).
    pub fn relabel(&self, perm: &[u32]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition("relabel permutation has wrong length".into()));
        }
        Graph::new(
            self.n,
            self.edges
                .iter()
                .map(|e| Edge::new(perm[e.0 as usize], perm[e.1 as usize])),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_is_canonical() {
        assert_eq!(Edge::new(3, 1), Edge(1, 3));
        assert_eq!(Edge::new(1, 3), Edge(1, 3));
    }

    #[test]
    fn complete_graph_counts() {
        let g = Graph::complete(7);
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.max_degree(), 6);
        assert!(g.is_complete());
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::new(3, [Edge(1, 1)]).is_err());
        assert!(Graph::new(3, [Edge(0, 1), Edge(1, 0)]).is_err());
        assert!(Graph::new(3, [Edge(0, 3)]).is_err());
    }

    #[test]
    fn edges_sorted_canonically() {
        let g = Graph::new(4, [Edge::new(3, 2), Edge::new(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[Edge(0, 1), Edge(2, 3)]);
    }
}
