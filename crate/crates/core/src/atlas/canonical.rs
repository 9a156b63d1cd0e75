//! Canonical forms of hypergraphs under vertex relabeling.
//!
//! An edge ordering determines a 0/1 incidence matrix whose columns are sorted
//! so that, after each row, identical column prefixes sit together. Row `p` is
//! recorded as the number of ones inside each group of identical prefixes,
//! which depends only on the first `p + 1` edges. The certificate is the
//! lexicographically largest row sequence over edge orderings that respect an
//! isomorphism-invariant refinement of the edges. Branches are cut when their
//! next row is not maximal, and swaps of twin edges (edges differing only in
//! private vertices) are explored once.

use std::fmt;

use serde::Serialize;

use crate::hypercomb::{Hypergraph, VertexSet, MAX_VERTEX};

/// Canonical certificate; equal iff the hypergraphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn of(g: &Hypergraph) -> Self {
        canonical_labeling(g, None).form
    }

    /// Certificate of `g` with edge `edge` (an index into `g.edges()`) marked.
    pub fn with_marked_edge(g: &Hypergraph, edge: usize) -> Self {
        canonical_labeling(g, Some(edge)).form
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub form: CanonicalForm,
    /// Edge indices in canonical order.
    pub edge_order: Vec<usize>,
    /// Vertex labels in canonical order; position `p` gets label `p + 1`.
    pub vertex_order: Vec<usize>,
    /// Refinement color of each edge; edges in one orbit share a color.
    pub edge_colors: Vec<usize>,
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> (Vec<usize>, usize) {
    let mut sorted = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = sigs
        .iter()
        .map(|s| sorted.binary_search(s).expect("present"))
        .collect();
    (ranks, sorted.len())
}

/// Color refinement on the vertex-edge incidence graph.
fn edge_colors(g: &Hypergraph, marked: Option<usize>) -> Vec<usize> {
    let verts = g.vertices().to_vec();
    let edges = g.edges();
    let mut pos = [usize::MAX; MAX_VERTEX + 1];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    let init: Vec<(u8, usize)> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| (u8::from(marked != Some(i)), e.len()))
        .collect();
    let (mut ec, mut ne) = rank(&init);
    let mut vc = vec![0usize; verts.len()];
    let mut nv = 1.min(verts.len());
    loop {
        let vsig: Vec<(usize, Vec<usize>)> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut around: Vec<usize> = edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.contains(v))
                    .map(|(j, _)| ec[j])
                    .collect();
                around.sort_unstable();
                (vc[i], around)
            })
            .collect();
        let esig: Vec<(usize, Vec<usize>)> = edges
            .iter()
            .enumerate()
            .map(|(j, e)| {
                let mut around: Vec<usize> = e.iter().map(|v| vc[pos[v]]).collect();
                around.sort_unstable();
                (ec[j], around)
            })
            .collect();
        let (vc2, nv2) = rank(&vsig);
        let (ec2, ne2) = rank(&esig);
        let stable = nv2 == nv && ne2 == ne;
        vc = vc2;
        ec = ec2;
        nv = nv2;
        ne = ne2;
        if stable {
            return ec;
        }
    }
}

/// `twins[e]` has bit `f` when swapping `e` and `f` is an automorphism fixing
/// every other edge.
fn twin_masks(g: &Hypergraph, marked: Option<usize>) -> Vec<u64> {
    let edges = g.edges();
    let private = |s: VertexSet| s.iter().all(|v| g.vertex_degree(v) == 1);
    (0..edges.len())
        .map(|i| {
            let mut mask = 0u64;
            for j in 0..edges.len() {
                if i == j || marked == Some(i) || marked == Some(j) {
                    continue;
                }
                let (a, b) = (edges[i].difference(edges[j]), edges[j].difference(edges[i]));
                if a.len() == b.len() && private(a) && private(b) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect()
}

struct Search<'a> {
    edges: &'a [VertexSet],
    colors: &'a [usize],
    twins: &'a [u64],
    cert: Vec<u8>,
    order: Vec<usize>,
    best: Option<(Vec<u8>, Vec<usize>, Vec<VertexSet>)>,
}

impl Search<'_> {
    fn go(&mut self, groups: &[VertexSet], placed: u64) {
        let t = self.edges.len();
        if self.order.len() == t {
            let better = match &self.best {
                None => true,
                Some((b, _, _)) => self.cert > *b,
            };
            if better {
                self.best = Some((self.cert.clone(), self.order.clone(), groups.to_vec()));
            }
            return;
        }
        let unplaced = |e: &usize| placed >> e & 1 == 0;
        let cell = (0..t).filter(unplaced).map(|e| self.colors[e]).min().expect("edge left");
        let candidates: Vec<(usize, Vec<u8>)> = (0..t)
            .filter(|e| unplaced(e) && self.colors[*e] == cell)
            .map(|e| {
                let row = groups
                    .iter()
                    .map(|g| g.intersection(self.edges[e]).len() as u8)
                    .collect();
                (e, row)
            })
            .collect();
        let top = candidates.iter().map(|(_, r)| r).max().expect("candidate").clone();
        let mark = self.cert.len();
        self.cert.extend_from_slice(&top);
        if let Some((b, _, _)) = &self.best {
            let m = self.cert.len().min(b.len());
            if self.cert[..m] < b[..m] {
                self.cert.truncate(mark);
                return;
            }
        }
        let mut explored = 0u64;
        for (e, row) in &candidates {
            if *row != top || self.twins[*e] & explored != 0 {
                continue;
            }
            explored |= 1 << e;
            let edge = self.edges[*e];
            let mut next = Vec::with_capacity(groups.len() * 2);
            for g in groups {
                let (inside, outside) = (g.intersection(edge), g.difference(edge));
                if !inside.is_empty() {
                    next.push(inside);
                }
                if !outside.is_empty() {
                    next.push(outside);
                }
            }
            self.order.push(*e);
            self.go(&next, placed | 1 << e);
            self.order.pop();
        }
        self.cert.truncate(mark);
    }
}

/// Canonical labeling with an optional marked edge. Supports up to 64 edges;
/// the search is exponential in the worst case.
pub fn canonical_labeling(g: &Hypergraph, marked: Option<usize>) -> CanonicalLabeling {
    let edges = g.edges();
    assert!(edges.len() <= 64, "canonical forms support at most 64 edges");
    let colors = edge_colors(g, marked);
    let twins = twin_masks(g, marked);
    let header = vec![g.n() as u8, edges.len() as u8, u8::from(marked.is_some())];
    let mut search = Search {
        edges,
        colors: &colors,
        twins: &twins,
        cert: header,
        order: Vec::new(),
        best: None,
    };
    let start: Vec<VertexSet> = if g.vertices().is_empty() { vec![] } else { vec![g.vertices()] };
    search.go(&start, 0);
    let (cert, order, groups) = search.best.expect("at least one ordering");
    CanonicalLabeling {
        form: CanonicalForm(cert),
        edge_order: order,
        vertex_order: groups.iter().flat_map(|s| s.iter()).collect(),
        edge_colors: colors,
    }
}

/// `g` relabeled so that vertices appear in canonical order as `1..=n`.
pub fn canonical_hypergraph(g: &Hypergraph) -> Hypergraph {
    relabel_by(g, &canonical_labeling(g, None).vertex_order)
}

pub(crate) fn relabel_by(g: &Hypergraph, vertex_order: &[usize]) -> Hypergraph {
    let mut perm = vec![0usize; g.max_label()];
    for (p, &v) in vertex_order.iter().enumerate() {
        perm[v - 1] = p + 1;
    }
    g.relabeled(&perm).expect("canonical order is a bijection")
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && CanonicalForm::of(a) == CanonicalForm::of(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let raw: Vec<Vec<usize>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::new(n, &raw, false).unwrap()
    }

    #[test]
    fn relabeled_copies_agree() {
        let g = hg(6, &[&[1, 2, 4], &[1, 2, 5], &[1, 3, 6], &[2, 3, 4]]);
        let perm = [6, 3, 1, 2, 5, 4];
        let h = g.relabeled(&perm).unwrap();
        assert_eq!(CanonicalForm::of(&g), CanonicalForm::of(&h));
        assert_eq!(canonical_hypergraph(&g), canonical_hypergraph(&h));
    }

    #[test]
    fn distinguishes_small_graphs() {
        let path = hg(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let star = hg(4, &[&[1, 2], &[1, 3], &[1, 4]]);
        let tri = hg(4, &[&[1, 2], &[2, 3], &[1, 3]]);
        let forms = [&path, &star, &tri].map(CanonicalForm::of);
        assert_ne!(forms[0], forms[1]);
        assert_ne!(forms[0], forms[2]);
        assert_ne!(forms[1], forms[2]);
    }

    #[test]
    fn isolated_vertices_count() {
        let a = hg(3, &[&[1, 2]]);
        let b = hg(2, &[&[1, 2]]);
        assert_ne!(CanonicalForm::of(&a), CanonicalForm::of(&b));
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn marked_edges_follow_orbits() {
        let path = hg(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        let idx = |e: &[usize]| {
            let s: VertexSet = e.iter().copied().collect();
            path.edges().iter().position(|&f| f == s).unwrap()
        };
        let end_a = CanonicalForm::with_marked_edge(&path, idx(&[1, 2]));
        let end_b = CanonicalForm::with_marked_edge(&path, idx(&[3, 4]));
        let mid = CanonicalForm::with_marked_edge(&path, idx(&[2, 3]));
        assert_eq!(end_a, end_b);
        assert_ne!(end_a, mid);
    }

    #[test]
    fn large_matching_is_fast() {
        let raw: Vec<Vec<usize>> = (0..20).map(|i| vec![2 * i + 1, 2 * i + 2]).collect();
        let g = Hypergraph::new(40, &raw, false).unwrap();
        let lab = canonical_labeling(&g, None);
        assert_eq!(lab.edge_order.len(), 20);
        assert_eq!(lab.vertex_order.len(), 40);
    }
}
