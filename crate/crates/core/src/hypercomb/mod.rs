//! Hypergraphs, their Stanley–Reisner complexes, and the combinatorial
//! operations used throughout the engines: induced sub-hypergraphs, link and
//! antistar, forest/tree orderings, proper colorings, leaves, graph diameter
//! and the edge intersection graph.
//!
//! Vertices are 1-based labels held in a [`VertexSet`] bitmask, so labels are
//! limited to `1..=64`. Operations never renumber vertices unless asked to
//! (see [`Hypergraph::relabel_compact`]).

mod complex;
mod graph;
mod order;
mod vertex_set;

pub use complex::SimplicialComplexView;
pub use graph::IntersectionGraph;
pub use order::{Coloring, TreeOrdering, DEFAULT_ORDERING_CAP};
pub use vertex_set::{subsets_of_size, VertexSet, MAX_VERTEX};

use crate::error::{Error, Result};

/// A finite vertex set together with an antichain of nonempty edges.
///
/// Edges are kept in canonical order (cardinality, then lexicographic), so two
/// hypergraphs with the same vertex set and edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertices: VertexSet,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a hypergraph on vertices `1..=n` from raw edge lists.
    ///
    /// With `minimalize` set, edges strictly containing another edge are dropped
    /// and duplicates merged; otherwise any inclusion (duplicates included) is
    /// reported as [`Error::NotAntichain`].
    pub fn new(n: usize, raw_edges: &[Vec<usize>], minimalize: bool) -> Result<Self> {
        if n > MAX_VERTEX {
            return Err(Error::TooManyVertices {
                count: n,
                cap: MAX_VERTEX,
            });
        }
        let mut sets = Vec::with_capacity(raw_edges.len());
        for (i, raw) in raw_edges.iter().enumerate() {
            if raw.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            let mut s = VertexSet::EMPTY;
            for &v in raw {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, max: n });
                }
                s.insert(v);
            }
            sets.push(s);
        }
        Self::from_sets(VertexSet::full(n), sets, minimalize)
    }

    /// Builds a hypergraph from bitmask edges over an arbitrary vertex set.
    pub fn from_sets(
        vertices: VertexSet,
        edges: impl IntoIterator<Item = VertexSet>,
        minimalize: bool,
    ) -> Result<Self> {
        let mut sets: Vec<VertexSet> = Vec::new();
        for (i, e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(i));
            }
            if !e.is_subset(vertices) {
                let v = e.difference(vertices).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    max: vertices.max().unwrap_or(0),
                });
            }
            sets.push(e);
        }
        if minimalize {
            return Ok(Self::from_antichain(vertices, minimal_sets(sets)));
        }
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset(*b) && (a != b || i < j) {
                    return Err(Error::NotAntichain {
                        contained: a.to_vec(),
                        container: b.to_vec(),
                    });
                }
            }
        }
        Ok(Self::from_antichain(vertices, sets))
    }

    /// Wraps edges already known to form an antichain inside `vertices`.
    pub(crate) fn from_antichain(vertices: VertexSet, mut edges: Vec<VertexSet>) -> Self {
        edges.sort_by(VertexSet::canonical_cmp);
        debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
        Hypergraph { vertices, edges }
    }

    /// The hypergraph with no edges on vertices `1..=n`.
    pub fn empty(n: usize) -> Self {
        Hypergraph {
            vertices: VertexSet::full(n),
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Largest vertex label in use (0 for the empty vertex set).
    pub fn max_label(&self) -> usize {
        self.vertices.max().unwrap_or(0)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 1-based vertex lists.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    /// Maximum edge cardinality (0 without edges).
    pub fn degree(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// All edges have the same cardinality. Vacuously true without edges.
    pub fn is_pure(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Union of all edges.
    pub fn covered(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    /// Number of edges containing `v`.
    pub fn vertex_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                max: self.max_label(),
            })
        }
    }

    /// `G[W]`: vertex set `W`, edges of `G` contained in `W`. Labels are kept.
    pub fn induced(&self, w: VertexSet) -> Result<Hypergraph> {
        if !w.is_subset(self.vertices) {
            let v = w.difference(self.vertices).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex: v,
                max: self.max_label(),
            });
        }
        Ok(Hypergraph {
            vertices: w,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| e.is_subset(w))
                .collect(),
        })
    }

    /// Renumbers the vertex set to `1..=n` preserving order. Returns the new
    /// hypergraph and the map `new label - 1 -> old label`.
    pub fn relabel_compact(&self) -> (Hypergraph, Vec<usize>) {
        let map = self.vertices.to_vec();
        let mut inverse = [0usize; MAX_VERTEX + 1];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| inverse[v]).collect())
            .collect();
        (
            Hypergraph::from_antichain(VertexSet::full(map.len()), edges),
            map,
        )
    }

    /// Applies a vertex relabeling `v -> perm[v - 1]` on vertices `1..=perm.len()`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Hypergraph> {
        let image = |v: usize| -> Result<usize> {
            perm.get(v - 1).copied().filter(|&w| w >= 1 && w <= MAX_VERTEX).ok_or(
                Error::VertexOutOfRange {
                    vertex: v,
                    max: perm.len(),
                },
            )
        };
        let mut vertices = VertexSet::EMPTY;
        for v in self.vertices {
            vertices.insert(image(v)?);
        }
        if vertices.len() != self.vertices.len() {
            return Err(Error::BadParams("relabeling is not injective".into()));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let mut s = VertexSet::EMPTY;
            for v in *e {
                s.insert(image(v)?);
            }
            edges.push(s);
        }
        Ok(Hypergraph::from_antichain(vertices, edges))
    }

    /// Link of `v`: drop `v`, replace each edge `F` through `v` by `F - {v}`,
    /// then delete edges that became non-minimal.
    ///
    /// Fails with [`Error::DegenerateLink`] when `{v}` is itself an edge.
    pub fn link(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        let vs = VertexSet::singleton(v);
        if self.edges.contains(&vs) {
            return Err(Error::DegenerateLink(v));
        }
        Ok(Hypergraph::from_antichain(
            self.vertices.without(v),
            link_edges(&self.edges, v),
        ))
    }

    /// Antistar `G - v`: drop `v` and every edge through it.
    pub fn antistar(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        Ok(Hypergraph {
            vertices: self.vertices.without(v),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.contains(v))
                .collect(),
        })
    }

    /// Vertices lying in exactly one edge.
    pub fn leaves(&self) -> VertexSet {
        let mut once = VertexSet::EMPTY;
        let mut more = VertexSet::EMPTY;
        for &e in &self.edges {
            more = more.union(once.intersection(e));
            once = once.union(e);
        }
        once.difference(more)
    }

    /// The Stanley–Reisner complex `Γ(I(G))`, whose minimal nonfaces are the edges.
    pub fn complex(&self) -> SimplicialComplexView {
        SimplicialComplexView::new(self.vertices, self.edges.clone())
    }
}

/// Inclusion-minimal members of `sets`, deduplicated, in canonical order.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(VertexSet::canonical_cmp);
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // canonical order puts every proper subset of `s` before it
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Edge set of the link at `v` (caller guarantees `{v}` is not an edge).
pub(crate) fn link_edges(edges: &[VertexSet], v: usize) -> Vec<VertexSet> {
    minimal_sets(edges.iter().map(|e| e.without(v)).collect())
}
