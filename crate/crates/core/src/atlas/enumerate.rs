//! Isomorph-free generation of antichains by canonical augmentation.
//!
//! Classes are grown one edge at a time. A child `G + e` is kept only when `e`
//! lies in the same orbit as the child's canonical deletable edge, so each
//! class is produced from exactly one parent class; isomorphic siblings from
//! the same parent are merged by certificate.

use std::collections::{BTreeMap, HashSet};
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::canonical::{canonical_labeling, relabel_by, CanonicalForm};
use crate::error::{Error, Result};
use crate::hypercomb::{subsets_of_size, Hypergraph, VertexSet, MAX_VERTEX};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProgress {
    pub edges: usize,
    pub classes: usize,
    pub nodes: u64,
}

pub type ProgressFn<'a> = &'a (dyn Fn(&SearchProgress) + Sync);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Growth {
    /// Any edge of an allowed size that keeps the antichain.
    Antichain,
    /// Pure hypertrees: each new edge has exactly one new vertex.
    Hypertree,
}

pub(crate) struct Augmenter<'a> {
    pub sizes: RangeInclusive<usize>,
    pub growth: Growth,
    pub keep: &'a (dyn Fn(&Hypergraph) -> bool + Sync),
    pub budget: u64,
    pub progress: Option<ProgressFn<'a>>,
}

impl Augmenter<'_> {
    /// Class lists for `0..=t` edges, each sorted by certificate.
    pub fn run(&self, t: usize) -> Result<Vec<Vec<Hypergraph>>> {
        let nodes = AtomicU64::new(0);
        let mut levels = vec![vec![Hypergraph::empty(0)]];
        for size in 1..=t {
            let parents = &levels[size - 1];
            let children: Vec<Vec<(CanonicalForm, Hypergraph)>> = parents
                .par_iter()
                .map(|p| self.children(p, &nodes))
                .collect::<Result<_>>()?;
            let mut merged = BTreeMap::new();
            for (cf, h) in children.into_iter().flatten() {
                merged.entry(cf).or_insert(h);
            }
            let level: Vec<Hypergraph> = merged.into_values().collect();
            if let Some(report) = self.progress {
                report(&SearchProgress {
                    edges: size,
                    classes: level.len(),
                    nodes: nodes.load(Ordering::Relaxed),
                });
            }
            levels.push(level);
        }
        Ok(levels)
    }

    fn candidates(&self, p: &Hypergraph) -> Vec<VertexSet> {
        let m = p.n();
        let mut out = Vec::new();
        for size in self.sizes.clone() {
            let fresh: Box<dyn Iterator<Item = usize>> = match self.growth {
                Growth::Antichain => Box::new(0..=size),
                Growth::Hypertree if p.edge_count() == 0 => Box::new(std::iter::once(size)),
                Growth::Hypertree => Box::new(std::iter::once(1)),
            };
            for k in fresh {
                if m + k > MAX_VERTEX || size - k > m {
                    continue;
                }
                let new_part = VertexSet::full(m + k).difference(VertexSet::full(m));
                for s in subsets_of_size(VertexSet::full(m), size - k) {
                    let e = s.union(new_part);
                    if p.edges().iter().all(|f| !f.is_subset(e) && !e.is_subset(*f)) {
                        out.push(e);
                    }
                }
            }
        }
        out
    }

    fn deletable(&self, g: &Hypergraph, idx: usize) -> bool {
        match self.growth {
            Growth::Antichain => true,
            Growth::Hypertree => {
                if g.edge_count() == 1 {
                    return true;
                }
                let e = g.edges()[idx];
                let private = e.iter().filter(|&v| g.vertex_degree(v) == 1).count();
                if private != 1 {
                    return false;
                }
                let rest: Vec<VertexSet> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != idx)
                    .map(|(_, f)| *f)
                    .collect();
                let covered = rest.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
                Hypergraph::from_sets(covered, rest, false)
                    .and_then(|h| h.is_hypertree())
                    .unwrap_or(false)
            }
        }
    }

    fn children(&self, p: &Hypergraph, nodes: &AtomicU64) -> Result<Vec<(CanonicalForm, Hypergraph)>> {
        let cands = self.candidates(p);
        let seen = nodes.fetch_add(cands.len() as u64, Ordering::Relaxed) + cands.len() as u64;
        if seen > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let mut siblings = HashSet::new();
        let mut out = Vec::new();
        for e in cands {
            let m = p.n().max(e.max().unwrap_or(0));
            let mut edges = p.edges().to_vec();
            edges.push(e);
            let child = Hypergraph::from_sets(VertexSet::full(m), edges, false)?;
            if !(self.keep)(&child) {
                continue;
            }
            let new_idx = child
                .edges()
                .iter()
                .position(|&f| f == e)
                .expect("new edge present");
            let lab = canonical_labeling(&child, None);
            let Some(&c) = lab.edge_order.iter().find(|&&i| self.deletable(&child, i)) else {
                continue;
            };
            let accepted = c == new_idx
                || (lab.edge_colors[c] == lab.edge_colors[new_idx]
                    && CanonicalForm::with_marked_edge(&child, c)
                        == CanonicalForm::with_marked_edge(&child, new_idx));
            if accepted && siblings.insert(lab.form.clone()) {
                out.push((lab.form, relabel_by(&child, &lab.vertex_order)));
            }
        }
        Ok(out)
    }
}

/// One representative per isomorphism class of antichains of `t` distinct
/// `d`-subsets without isolated vertices, sorted by canonical form.
pub fn enumerate_pure_hypergraphs(d: usize, t: usize, budget: u64) -> Result<Vec<Hypergraph>> {
    enumerate_pure_hypergraphs_with_progress(d, t, budget, None)
}

pub fn enumerate_pure_hypergraphs_with_progress(
    d: usize,
    t: usize,
    budget: u64,
    progress: Option<ProgressFn<'_>>,
) -> Result<Vec<Hypergraph>> {
    if d == 0 {
        return Err(Error::BadParams("degree must be at least 1".into()));
    }
    check_support(d, t)?;
    let aug = Augmenter {
        sizes: d..=d,
        growth: Growth::Antichain,
        keep: &|_| true,
        budget,
        progress,
    };
    Ok(aug.run(t)?.pop().expect("level t"))
}

/// All classes with `t` edges of sizes `1..=d`, at least one of size `d`.
pub fn enumerate_hypergraphs_up_to_degree(d: usize, t: usize, budget: u64) -> Result<Vec<Hypergraph>> {
    if d == 0 {
        return Err(Error::BadParams("degree must be at least 1".into()));
    }
    check_support(d, t)?;
    let aug = Augmenter {
        sizes: 1..=d,
        growth: Growth::Antichain,
        keep: &|_| true,
        budget,
        progress: None,
    };
    let mut level = aug.run(t)?.pop().expect("level t");
    level.retain(|g| g.degree() == d);
    Ok(level)
}

/// Pure degree-`d` hypertrees with `t` edges, up to isomorphism.
pub fn enumerate_hypertrees(d: usize, t: usize, budget: u64) -> Result<Vec<Hypergraph>> {
    if d < 2 {
        return Err(Error::BadParams("hypertrees need degree at least 2".into()));
    }
    if t > 0 && d + t - 1 > MAX_VERTEX {
        return Err(Error::TooLarge(format!("{} vertices", d + t - 1)));
    }
    let aug = Augmenter {
        sizes: d..=d,
        growth: Growth::Hypertree,
        keep: &|_| true,
        budget,
        progress: None,
    };
    Ok(aug.run(t)?.pop().expect("level t"))
}

fn check_support(d: usize, t: usize) -> Result<()> {
    if d * t > MAX_VERTEX {
        return Err(Error::TooLarge(format!(
            "support of {d}*{t} vertices exceeds {MAX_VERTEX}"
        )));
    }
    Ok(())
}
