use std::collections::VecDeque;

use super::{Hypergraph, VertexSet};
use crate::error::{Error, Result};

impl Hypergraph {
    /// Largest shortest-path distance between two vertices of a connected simple graph.
    pub fn diameter(&self) -> Result<usize> {
        if self.degree() != 2 || !self.is_pure() {
            return Err(Error::NotAGraph);
        }
        let verts = self.vertices().to_vec();
        let mut adj = vec![VertexSet::EMPTY; self.max_label() + 1];
        for e in self.edges() {
            let (a, b) = (e.min().unwrap(), e.max().unwrap());
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let mut best = 0;
        for &s in &verts {
            let mut dist = vec![usize::MAX; self.max_label() + 1];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &v in &verts {
                if dist[v] == usize::MAX {
                    return Err(Error::Disconnected);
                }
                best = best.max(dist[v]);
            }
        }
        Ok(best)
    }

    /// Graph on edge indices, adjacent iff the edges intersect.
    pub fn intersection_graph(&self) -> IntersectionGraph {
        let t = self.edge_count();
        let mut adj = vec![0u64; t];
        for i in 0..t {
            for j in (i + 1)..t {
                if self.edges()[i].intersects(self.edges()[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        IntersectionGraph { adj }
    }
}

/// Simple graph on `0..t` (edge indices of the source hypergraph, in its
/// canonical edge order). Supports `t <= 64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    adj: Vec<u64>,
}

impl IntersectionGraph {
    pub fn from_edges(t: usize, edges: &[(usize, usize)]) -> Self {
        assert!(t <= 64);
        let mut adj = vec![0u64; t];
        for &(a, b) in edges {
            assert!(a != b && a < t && b < t);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        IntersectionGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.adj.len() {
            for j in (i + 1)..self.adj.len() {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d
    }
}
