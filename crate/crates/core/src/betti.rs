//! Graded and total Betti numbers of squarefree monomial ideals.
//!
//! Minimal Betti numbers come from Hochster's formula,
//! `β_{i,a}(I) = Σ_{|W| = a} β̃_{|W|-i-2}(Γ[W])`, with the resolution taken of
//! `I` itself so that `β_{0,a}` counts degree-`a` generators. Taylor Betti
//! numbers count `(i+1)`-subsets of generators by the size of their union.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{reduced_betti, reduced_betti_all, FieldSpec, DEFAULT_FACE_CAP};
use crate::hypercomb::{subsets_of_size, Hypergraph, SimplicialComplexView, VertexSet};
use crate::report::{Comparison, Relation, Report};

/// Caps and switches shared by the engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest vertex count for a full Hochster table.
    pub max_vertices: usize,
    /// Largest edge count for a full Taylor table.
    pub max_edges: usize,
    pub face_cap: usize,
    /// Skip cone subsets and apply vertex reductions before linear algebra.
    pub cone_pruning: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_vertices: 22,
            max_edges: 25,
            face_cap: DEFAULT_FACE_CAP,
            cone_pruning: true,
        }
    }
}

impl EngineConfig {
    pub fn without_pruning() -> Self {
        EngineConfig {
            cone_pruning: false,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiKind {
    Minimal,
    Taylor,
}

/// Graded Betti numbers `(i, a) -> β_{i,a}`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub kind: BettiKind,
    /// Coefficient field (minimal tables only).
    pub field: Option<FieldSpec>,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(kind: BettiKind, field: Option<FieldSpec>) -> Self {
        BettiTable {
            kind,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, i: usize, a: usize) -> u64 {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, a: usize, value: u64) {
        if value != 0 {
            *self.entries.entry((i, a)).or_insert(0) += value;
        }
    }

    /// Nonzero entries sorted by `(i, a)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `β_i = Σ_a β_{i,a}` for `i = 0..=max_index`.
    pub fn total(&self) -> Vec<u64> {
        let len = self.max_index().map_or(0, |m| m + 1);
        let mut out = vec![0u64; len];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// `β_i`, zero beyond the table.
    pub fn total_at(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Degrees with a nonzero entry.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.entries.keys().map(|k| k.1).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Σ_i (-1)^i β_{i,a}`.
    pub fn alternating_sum(&self, a: usize) -> i64 {
        self.entries
            .iter()
            .filter(|(k, _)| k.1 == a)
            .map(|(k, &v)| if k.0 % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// `β_i` for every index of the table.
pub fn total_betti(table: &BettiTable) -> Vec<u64> {
    table.total()
}

fn subset_profile(
    g: &Hypergraph,
    w: VertexSet,
    field: FieldSpec,
    cfg: &EngineConfig,
) -> Result<crate::homology::HomologyProfile> {
    let k = SimplicialComplexView::new(w, g.edges().to_vec());
    if cfg.cone_pruning {
        reduced_betti(&k, field, cfg.face_cap)
    } else {
        reduced_betti_all(&k, field, cfg.face_cap)
    }
}

/// Vertices whose subsets Hochster's sum must visit: with pruning, subsets
/// containing an uncovered vertex are cones and contribute nothing.
fn hochster_universe(g: &Hypergraph, cfg: &EngineConfig) -> VertexSet {
    if cfg.cone_pruning {
        g.covered()
    } else {
        g.vertices()
    }
}

fn is_cone_subset(g: &Hypergraph, w: VertexSet) -> bool {
    let covered = g
        .edges()
        .iter()
        .filter(|e| e.is_subset(w))
        .fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
    covered != w
}

/// Per-subset contributions to row `a` of the table, indexed by `i`.
fn hochster_row(
    g: &Hypergraph,
    a: usize,
    field: FieldSpec,
    cfg: &EngineConfig,
) -> Result<Vec<u64>> {
    let subsets: Vec<VertexSet> = subsets_of_size(hochster_universe(g, cfg), a).collect();
    subsets
        .par_iter()
        .map(|&w| -> Result<Vec<u64>> {
            let mut row = vec![0u64; a];
            if cfg.cone_pruning && is_cone_subset(g, w) {
                return Ok(row);
            }
            for (p, d) in subset_profile(g, w, field, cfg)?.nonzero() {
                // i = |W| - p - 2 must be a valid homological index
                let i = a as i64 - p - 2;
                if i >= 0 {
                    row[i as usize] += d;
                }
            }
            Ok(row)
        })
        .try_reduce(
            || vec![0u64; a],
            |mut x, y| {
                for (s, t) in x.iter_mut().zip(y) {
                    *s += t;
                }
                Ok(x)
            },
        )
}

/// `β_{i,a}(I(G))` over `field` by Hochster's formula; zero out of range.
pub fn hochster_graded_betti(
    g: &Hypergraph,
    i: usize,
    a: usize,
    field: FieldSpec,
    cfg: &EngineConfig,
) -> Result<u64> {
    if a < i + 1 || a > g.n() {
        return Ok(0);
    }
    let subsets: Vec<VertexSet> = subsets_of_size(hochster_universe(g, cfg), a).collect();
    let p = a as i64 - i as i64 - 2;
    subsets
        .par_iter()
        .map(|&w| -> Result<u64> {
            if cfg.cone_pruning && is_cone_subset(g, w) {
                return Ok(0);
            }
            Ok(subset_profile(g, w, field, cfg)?.dim(p))
        })
        .try_reduce(|| 0, |x, y| Ok(x + y))
}

/// The full minimal Betti table of `I(G)`.
pub fn betti_table(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<BettiTable> {
    let universe = hochster_universe(g, cfg);
    if universe.len() > cfg.max_vertices {
        return Err(Error::TooManyVertices {
            count: universe.len(),
            cap: cfg.max_vertices,
        });
    }
    let mut table = BettiTable::new(BettiKind::Minimal, Some(field));
    for a in 1..=universe.len() {
        for (i, v) in hochster_row(g, a, field, cfg)?.into_iter().enumerate() {
            table.add(i, a, v);
        }
    }
    Ok(table)
}

/// `β^T_{i,j}`: number of `(i+1)`-subsets of edges whose union has `j` vertices.
pub fn taylor_graded_betti(g: &Hypergraph, i: usize, j: usize) -> u64 {
    let edges = g.edges();
    let k = i + 1;
    if k > edges.len() {
        return 0;
    }
    fn go(edges: &[VertexSet], start: usize, left: usize, union: VertexSet, j: usize) -> u64 {
        if union.len() > j {
            return 0;
        }
        if left == 0 {
            return u64::from(union.len() == j);
        }
        (start..=edges.len() - left)
            .map(|e| go(edges, e + 1, left - 1, union.union(edges[e]), j))
            .sum()
    }
    go(edges, 0, k, VertexSet::EMPTY, j)
}

/// The full Taylor table over all nonempty subsets of edges.
pub fn taylor_table(g: &Hypergraph, cfg: &EngineConfig) -> Result<BettiTable> {
    let t = g.edge_count();
    if t > cfg.max_edges {
        return Err(Error::TooManyEdges {
            count: t,
            cap: cfg.max_edges,
        });
    }
    let n = g.max_label();
    // counts[size][union]
    let mut counts = vec![vec![0u64; n + 1]; t + 1];
    fn go(edges: &[VertexSet], start: usize, size: usize, union: VertexSet, counts: &mut [Vec<u64>]) {
        for e in start..edges.len() {
            let u = union.union(edges[e]);
            counts[size + 1][u.len()] += 1;
            go(edges, e + 1, size + 1, u, counts);
        }
    }
    go(g.edges(), 0, 0, VertexSet::EMPTY, &mut counts);
    let mut table = BettiTable::new(BettiKind::Taylor, None);
    for (size, row) in counts.iter().enumerate().skip(1) {
        for (j, &c) in row.iter().enumerate() {
            table.add(size - 1, j, c);
        }
    }
    Ok(table)
}

/// `β^T_{2,3d-1}` of a pure degree-`d` ideal as half the number of ordered
/// triples `(F_i, F_j, F_k)` with `F_i` disjoint from the others and
/// `|F_j ∩ F_k| = 1`.
pub fn taylor_beta2_3dm1(g: &Hypergraph) -> Result<u64> {
    if !g.is_pure() {
        return Err(Error::NotPure);
    }
    let e = g.edges();
    let mut ordered = 0u64;
    for (i, fi) in e.iter().enumerate() {
        for (j, fj) in e.iter().enumerate() {
            if j == i || fi.intersects(*fj) {
                continue;
            }
            for (k, fk) in e.iter().enumerate() {
                if k == i || k == j || fi.intersects(*fk) {
                    continue;
                }
                if fj.intersection(*fk).len() == 1 {
                    ordered += 1;
                }
            }
        }
    }
    Ok(ordered / 2)
}

/// Checks `Σ_i (-1)^i β_{i,a} = Σ_i (-1)^i β^T_{i,a}` in every degree `a`.
pub fn euler_consistency(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<Report> {
    let minimal = betti_table(g, field, cfg)?;
    let taylor = taylor_table(g, cfg)?;
    let mut degrees = minimal.degrees();
    degrees.extend(taylor.degrees());
    degrees.sort_unstable();
    degrees.dedup();
    let mut report = Report::new("euler_consistency");
    for a in degrees {
        report.push(Comparison::new(
            format!("degree {a}"),
            Relation::Equal,
            taylor.alternating_sum(a),
            minimal.alternating_sum(a),
        ));
    }
    Ok(report)
}
