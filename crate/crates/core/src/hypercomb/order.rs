use std::collections::HashSet;

use super::{Hypergraph, VertexSet, MAX_VERTEX};
use crate::error::{Error, Result};

/// Default edge-count cap for the exact ordering search.
pub const DEFAULT_ORDERING_CAP: usize = 25;

/// An enumeration `F_1, ..., F_t` of the edges together with the number of
/// vertices each edge adds to the union of its predecessors.
///
/// `order` holds indices into [`Hypergraph::edges`]; `new_counts[0] = |F_1|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOrdering {
    pub order: Vec<usize>,
    pub new_counts: Vec<usize>,
}

impl TreeOrdering {
    fn from_order(g: &Hypergraph, order: Vec<usize>) -> Self {
        let mut seen = VertexSet::EMPTY;
        let new_counts = order
            .iter()
            .map(|&i| {
                let e = g.edges()[i];
                let fresh = e.difference(seen).len();
                seen = seen.union(e);
                fresh
            })
            .collect();
        TreeOrdering { order, new_counts }
    }

    /// Checks the forest (`exact_one = false`) or tree condition on steps `>= 2`.
    pub fn satisfies(&self, exact_one: bool) -> bool {
        self.new_counts
            .iter()
            .skip(1)
            .all(|&c| if exact_one { c == 1 } else { c >= 1 })
    }
}

#[derive(Clone, Copy)]
enum Step {
    Forest,
    Tree,
}

impl Step {
    fn admits(self, fresh: usize) -> bool {
        match self {
            Step::Forest => fresh >= 1,
            Step::Tree => fresh == 1,
        }
    }
}

/// Exact search over sets of already placed edges. Whether the remaining edges
/// can be placed depends only on the placed set (through its union), so dead
/// sets are memoized.
fn search_ordering(g: &Hypergraph, step: Step, cap: usize) -> Result<Option<TreeOrdering>> {
    let t = g.edge_count();
    if t > cap {
        return Err(Error::TooManyEdges { count: t, cap });
    }
    if t == 0 {
        return Ok(Some(TreeOrdering {
            order: Vec::new(),
            new_counts: Vec::new(),
        }));
    }
    let edges = g.edges();
    let full: u64 = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    let mut dead: HashSet<u64> = HashSet::new();

    fn dfs(
        edges: &[VertexSet],
        step: Step,
        placed: u64,
        union: VertexSet,
        full: u64,
        dead: &mut HashSet<u64>,
        order: &mut Vec<usize>,
    ) -> bool {
        if placed == full {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for (i, &e) in edges.iter().enumerate() {
            if placed >> i & 1 == 1 || !step.admits(e.difference(union).len()) {
                continue;
            }
            order.push(i);
            if dfs(edges, step, placed | 1 << i, union.union(e), full, dead, order) {
                return true;
            }
            order.pop();
        }
        dead.insert(placed);
        false
    }

    let mut order = Vec::with_capacity(t);
    for first in 0..t {
        order.clear();
        order.push(first);
        if dfs(edges, step, 1 << first, edges[first], full, &mut dead, &mut order) {
            return Ok(Some(TreeOrdering::from_order(g, order)));
        }
    }
    Ok(None)
}

impl Hypergraph {
    /// An edge enumeration in which every edge after the first adds at least one
    /// new vertex, if one exists (i.e. `G` is a hyperforest).
    pub fn forest_ordering(&self) -> Result<Option<TreeOrdering>> {
        self.forest_ordering_with_cap(DEFAULT_ORDERING_CAP)
    }

    pub fn forest_ordering_with_cap(&self, cap: usize) -> Result<Option<TreeOrdering>> {
        search_ordering(self, Step::Forest, cap)
    }

    /// An edge enumeration in which every edge after the first adds exactly one
    /// new vertex, if `G` is pure and one exists (i.e. `G` is a hypertree).
    pub fn tree_ordering(&self) -> Result<Option<TreeOrdering>> {
        self.tree_ordering_with_cap(DEFAULT_ORDERING_CAP)
    }

    pub fn tree_ordering_with_cap(&self, cap: usize) -> Result<Option<TreeOrdering>> {
        if !self.is_pure() {
            if self.edge_count() > cap {
                return Err(Error::TooManyEdges {
                    count: self.edge_count(),
                    cap,
                });
            }
            return Ok(None);
        }
        search_ordering(self, Step::Tree, cap)
    }

    pub fn is_hyperforest(&self) -> Result<bool> {
        Ok(self.forest_ordering()?.is_some())
    }

    /// Hypertree with at least one edge.
    pub fn is_hypertree(&self) -> Result<bool> {
        Ok(self.edge_count() > 0 && self.tree_ordering()?.is_some())
    }

    /// A proper coloring with colors `1..=d`.
    ///
    /// Hypertrees colored with `degree(G)` colors get the propagated coloring
    /// (first edge colored `1..d` in increasing vertex order, each new vertex
    /// takes the one color missing from its edge). Every step of that is
    /// forced, so when the old vertices of some edge already repeat a color the
    /// hypertree has no proper coloring at all, e.g. `{1,2,3},{1,2,4},{3,4,5}`.
    /// Otherwise a backtracking search in increasing vertex order, smallest
    /// color first.
    pub fn proper_coloring(&self, d: usize) -> Result<Option<Coloring>> {
        let degree = self.degree();
        if d < degree {
            return Err(Error::ColorCountTooSmall { colors: d, degree });
        }
        if d == degree && degree > 0 {
            if let Some(ord) = self.tree_ordering()? {
                return Ok(self.propagate_coloring(&ord, d));
            }
        } else if self.edge_count() > DEFAULT_ORDERING_CAP {
            return Err(Error::TooManyEdges {
                count: self.edge_count(),
                cap: DEFAULT_ORDERING_CAP,
            });
        }
        Ok(self.backtrack_coloring(d))
    }

    fn propagate_coloring(&self, ord: &TreeOrdering, d: usize) -> Option<Coloring> {
        let mut colors = vec![0usize; self.max_label()];
        let first = self.edges()[ord.order[0]];
        for (c, v) in first.iter().enumerate() {
            colors[v - 1] = c + 1;
        }
        let mut seen = first;
        for &i in &ord.order[1..] {
            let e = self.edges()[i];
            let fresh = e.difference(seen).min().expect("tree step adds a vertex");
            let mut used = vec![false; d + 1];
            for v in e.without(fresh) {
                if used[colors[v - 1]] {
                    return None;
                }
                used[colors[v - 1]] = true;
            }
            colors[fresh - 1] = (1..=d).find(|&c| !used[c]).expect("d - 1 colors used");
            seen = seen.union(e);
        }
        for v in self.vertices() {
            if colors[v - 1] == 0 {
                colors[v - 1] = 1;
            }
        }
        Some(Coloring { colors })
    }

    fn backtrack_coloring(&self, d: usize) -> Option<Coloring> {
        let verts = self.vertices().to_vec();
        let mut colors = vec![0usize; self.max_label()];
        if d == 0 {
            return if verts.is_empty() {
                Some(Coloring { colors })
            } else {
                None
            };
        }
        // edges through each vertex, used for conflict checks
        let incident: Vec<Vec<VertexSet>> = verts
            .iter()
            .map(|&v| self.edges().iter().copied().filter(|e| e.contains(v)).collect())
            .collect();

        fn go(
            k: usize,
            verts: &[usize],
            incident: &[Vec<VertexSet>],
            d: usize,
            colors: &mut Vec<usize>,
        ) -> bool {
            if k == verts.len() {
                return true;
            }
            let v = verts[k];
            'color: for c in 1..=d {
                for e in &incident[k] {
                    if e.without(v).iter().any(|u| colors[u - 1] == c) {
                        continue 'color;
                    }
                }
                colors[v - 1] = c;
                if go(k + 1, verts, incident, d, colors) {
                    return true;
                }
                colors[v - 1] = 0;
            }
            false
        }

        go(0, &verts, &incident, d, &mut colors).then_some(Coloring { colors })
    }
}

/// Vertex coloring; `color(v)` is in `1..=d`, or 0 for labels outside the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// Builds a coloring from `(vertex, color)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let max = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        if max > MAX_VERTEX {
            return Err(Error::VertexOutOfRange {
                vertex: max,
                max: MAX_VERTEX,
            });
        }
        let mut colors = vec![0usize; max];
        for &(v, c) in pairs {
            if v == 0 || c == 0 {
                return Err(Error::BadParams("vertices and colors are 1-based".into()));
            }
            colors[v - 1] = c;
        }
        Ok(Coloring { colors })
    }

    pub fn color(&self, v: usize) -> usize {
        v.checked_sub(1)
            .and_then(|i| self.colors.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k == c && c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Highest color in use.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Sizes of color classes `1..=d`, counting only vertices inside `within`.
    pub fn class_sizes(&self, d: usize, within: VertexSet) -> Vec<usize> {
        (1..=d).map(|c| self.class(c).intersection(within).len()).collect()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
            .collect()
    }

    /// Checks that every vertex of `g` has a color in `1..=d` and no edge
    /// repeats a color.
    pub fn check_proper(&self, g: &Hypergraph, d: usize) -> Result<()> {
        for v in g.vertices() {
            let c = self.color(v);
            if c == 0 || c > d {
                return Err(Error::ImproperColoring(format!(
                    "vertex {v} has color {c} outside 1..={d}"
                )));
            }
        }
        for e in g.edges() {
            let mut used = VertexSet::EMPTY;
            for v in *e {
                let c = self.color(v);
                if used.contains(c) {
                    return Err(Error::ImproperColoring(format!(
                        "edge {:?} repeats color {c}",
                        e
                    )));
                }
                used.insert(c);
            }
        }
        Ok(())
    }
}
