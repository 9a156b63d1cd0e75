//! Isomorph-free enumeration against brute force with canonical-form dedup.

use std::collections::BTreeSet;

use bettilab::atlas::{
    enumerate_hypergraphs_up_to_degree, enumerate_hypertrees, enumerate_pure_hypergraphs, CanonicalForm,
    DEFAULT_BUDGET,
};
use bettilab::hypercomb::subsets_of_size;
use bettilab::{Hypergraph, VertexSet};

/// Covered vertices renumbered `1..=m`, isolated ones dropped.
fn compact(g: &Hypergraph) -> Hypergraph {
    g.induced(g.covered()).unwrap().relabel_compact().0
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..len)
        .flat_map(|last| {
            combinations(last, k - 1).into_iter().map(move |mut c| {
                c.push(last);
                c
            })
        })
        .collect()
}

fn brute(sizes: std::ops::RangeInclusive<usize>, t: usize, degree: usize) -> BTreeSet<CanonicalForm> {
    let n = degree * t;
    let pool: Vec<VertexSet> = sizes
        .flat_map(|k| subsets_of_size(VertexSet::full(n), k).collect::<Vec<_>>())
        .collect();
    let mut out = BTreeSet::new();
    for pick in combinations(pool.len(), t) {
        let edges: Vec<VertexSet> = pick.iter().map(|&i| pool[i]).collect();
        let antichain = edges
            .iter()
            .all(|a| edges.iter().all(|b| a == b || !a.is_subset(*b)));
        if !antichain || edges.iter().map(|e| e.len()).max() != Some(degree) {
            continue;
        }
        let g = Hypergraph::from_sets(VertexSet::full(n), edges, false).unwrap();
        out.insert(CanonicalForm::of(&compact(&g)));
    }
    out
}

fn forms(classes: &[Hypergraph]) -> BTreeSet<CanonicalForm> {
    let set: BTreeSet<CanonicalForm> = classes.iter().map(CanonicalForm::of).collect();
    assert_eq!(set.len(), classes.len(), "duplicate classes");
    set
}

#[test]
fn pure_graphs_are_complete() {
    for t in 1..=4 {
        let got = forms(&enumerate_pure_hypergraphs(2, t, DEFAULT_BUDGET).unwrap());
        assert_eq!(got, brute(2..=2, t, 2), "d=2 t={t}");
    }
}

#[test]
fn pure_triple_systems_are_complete() {
    for t in 1..=3 {
        let got = forms(&enumerate_pure_hypergraphs(3, t, DEFAULT_BUDGET).unwrap());
        assert_eq!(got, brute(3..=3, t, 3), "d=3 t={t}");
    }
}

#[test]
fn mixed_sizes_are_complete() {
    for t in 1..=2 {
        let got = forms(&enumerate_hypergraphs_up_to_degree(3, t, DEFAULT_BUDGET).unwrap());
        assert_eq!(got, brute(1..=3, t, 3), "t={t}");
    }
}

#[test]
fn known_counts() {
    // graphs without isolated vertices, by edge count
    let graphs: Vec<usize> = (2..=6)
        .map(|t| enumerate_pure_hypergraphs(2, t, DEFAULT_BUDGET).unwrap().len())
        .collect();
    assert_eq!(graphs, [2, 5, 11, 26, 68]);
    // unlabeled trees, by vertex count 2..=9
    let trees: Vec<usize> = (1..=8)
        .map(|t| enumerate_hypertrees(2, t, DEFAULT_BUDGET).unwrap().len())
        .collect();
    assert_eq!(trees, [1, 1, 2, 3, 6, 11, 23, 47]);
}

#[test]
fn hypertrees_are_the_tree_classes() {
    for (d, t) in [(2, 5), (3, 3), (3, 4)] {
        let pure = enumerate_pure_hypergraphs(d, t, DEFAULT_BUDGET).unwrap();
        let expected: BTreeSet<CanonicalForm> = pure
            .iter()
            .filter(|g| g.is_hypertree().unwrap())
            .map(CanonicalForm::of)
            .collect();
        assert_eq!(forms(&enumerate_hypertrees(d, t, DEFAULT_BUDGET).unwrap()), expected, "d={d} t={t}");
    }
}

#[test]
fn budget_is_reported() {
    let err = enumerate_pure_hypergraphs(3, 5, 10).unwrap_err();
    assert!(err.is_resource_limit());
}
