//! Seeded random instances for property checks and sampling.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypercomb::{Hypergraph, VertexSet, MAX_VERTEX};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset<R: Rng>(rng: &mut R, from: VertexSet, k: usize) -> VertexSet {
    from.iter().choose_multiple(rng, k).into_iter().collect()
}

/// Properly `d`-colorable degree-`d` hypertree on `n >= d` vertices: each
/// new vertex takes a random color and joins one old vertex of every other
/// color. These are exactly the hypertrees with a proper `d`-coloring.
pub fn random_hypertree<R: Rng>(rng: &mut R, d: usize, n: usize) -> Result<Hypergraph> {
    if d == 0 || n < d || n > MAX_VERTEX {
        return Err(Error::BadParams(format!("no hypertree with d={d} on n={n} vertices")));
    }
    let mut edges = vec![VertexSet::full(d)];
    let mut classes: Vec<Vec<usize>> = (1..=d).map(|v| vec![v]).collect();
    for v in (d + 1)..=n {
        let color = rng.gen_range(0..d);
        let mut e = VertexSet::singleton(v);
        for (c, class) in classes.iter().enumerate() {
            if c != color {
                e.insert(*class.choose(rng).expect("classes are nonempty"));
            }
        }
        classes[color].push(v);
        edges.push(e);
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    Hypergraph::from_sets(VertexSet::full(n), edges, false)?.relabeled(&perm)
}

/// Degree-`d` hyperforest with `t` edges of sizes in `1..=d`; the first edge
/// has size `d` and every later edge brings at least one new vertex.
pub fn random_hyperforest<R: Rng>(rng: &mut R, d: usize, t: usize) -> Result<Hypergraph> {
    if d == 0 || t == 0 || d * t > MAX_VERTEX {
        return Err(Error::BadParams(format!("no hyperforest shape d={d}, t={t}")));
    }
    let mut edges = vec![VertexSet::full(d)];
    let mut used = d;
    while edges.len() < t {
        let size = rng.gen_range(1..=d);
        let fresh = rng.gen_range(1..=size);
        let old_part = size - fresh;
        if old_part > used {
            continue;
        }
        let e = random_subset(rng, VertexSet::full(used), old_part)
            .union(VertexSet::full(used + fresh).difference(VertexSet::full(used)));
        if edges.iter().any(|f| f.is_subset(e)) {
            continue;
        }
        edges.push(e);
        used += fresh;
    }
    let mut perm: Vec<usize> = (1..=used).collect();
    perm.shuffle(rng);
    Hypergraph::from_sets(VertexSet::full(used), edges, false)?.relabeled(&perm)
}

/// `t` distinct random `d`-subsets of `[n]`.
pub fn random_pure<R: Rng>(rng: &mut R, d: usize, t: usize, n: usize) -> Result<Hypergraph> {
    if d == 0 || n < d || n > MAX_VERTEX || crate::bounds::binomial(n as u64, d as u64) < t as u64 {
        return Err(Error::BadParams(format!("cannot draw {t} distinct {d}-subsets of [{n}]")));
    }
    let mut edges: Vec<VertexSet> = Vec::with_capacity(t);
    while edges.len() < t {
        let e = random_subset(rng, VertexSet::full(n), d);
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::from_sets(VertexSet::full(n), edges, false)
}

/// Random antichain on `[n]` with up to `max_edges` edges of sizes `1..=max_size`.
pub fn random_antichain<R: Rng>(rng: &mut R, n: usize, max_edges: usize, max_size: usize) -> Result<Hypergraph> {
    if n == 0 || n > MAX_VERTEX || max_size == 0 {
        return Err(Error::BadParams("random_antichain needs n >= 1 and max_size >= 1".into()));
    }
    let target = rng.gen_range(1..=max_edges.max(1));
    let mut edges: Vec<VertexSet> = Vec::new();
    for _ in 0..4 * target {
        if edges.len() == target {
            break;
        }
        let size = rng.gen_range(1..=max_size.min(n));
        let e = random_subset(rng, VertexSet::full(n), size);
        if edges.iter().all(|f| !f.is_subset(e) && !e.is_subset(*f)) {
            edges.push(e);
        }
    }
    Hypergraph::from_sets(VertexSet::full(n), edges, false)
}
