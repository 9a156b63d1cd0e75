//! Randomized engine invariants, each against an independent computation.

use std::collections::BTreeSet;

use bettilab::atlas::random::{random_antichain, random_hyperforest, random_hypertree, rng};
use bettilab::atlas::CanonicalForm;
use bettilab::betti::{betti_table, euler_consistency, taylor_table, EngineConfig};
use bettilab::homology::{reduced_betti, reduced_betti_all, DEFAULT_FACE_CAP};
use bettilab::{FieldSpec, Hypergraph, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn antichain(seed: u64, n: usize, edges: usize, size: usize) -> Hypergraph {
    random_antichain(&mut rng(seed), n, edges, size).unwrap()
}

fn faces(g: &Hypergraph) -> BTreeSet<u64> {
    g.complex()
        .faces_by_size(DEFAULT_FACE_CAP)
        .unwrap()
        .into_iter()
        .flatten()
        .map(|f| f.bits())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_poincare(seed in any::<u64>(), n in 1usize..=8) {
        let g = antichain(seed, n, 6, 4);
        let k = g.complex();
        let f = k.f_vector(DEFAULT_FACE_CAP).unwrap();
        // f[s] counts faces of size s, dimension s - 1
        let chi: i64 = f.iter().enumerate().map(|(s, &c)| if s % 2 == 1 { c as i64 } else { -(c as i64) }).sum();
        let h = reduced_betti_all(&k, Q, DEFAULT_FACE_CAP).unwrap();
        prop_assert_eq!(h.euler(), chi);
    }

    #[test]
    fn reduced_homology_shortcuts_agree(seed in any::<u64>(), n in 1usize..=9) {
        let g = antichain(seed, n, 7, 4);
        let k = g.complex();
        for field in [Q, FieldSpec::PrimeField(2)] {
            prop_assert_eq!(
                reduced_betti(&k, field, DEFAULT_FACE_CAP).unwrap(),
                reduced_betti_all(&k, field, DEFAULT_FACE_CAP).unwrap()
            );
        }
    }

    #[test]
    fn finite_fields_dominate_rationals(seed in any::<u64>(), n in 2usize..=8) {
        let g = antichain(seed, n, 6, 3);
        let cfg = EngineConfig::default();
        let q = betti_table(&g, Q, &cfg).unwrap();
        for p in [2, 3] {
            let fp = betti_table(&g, FieldSpec::PrimeField(p), &cfg).unwrap();
            for ((i, a), v) in q.entries() {
                prop_assert!(fp.get(i, a) >= v);
            }
        }
    }

    #[test]
    fn cone_pruning_is_neutral(seed in any::<u64>(), n in 2usize..=9) {
        let g = antichain(seed, n, 6, 4);
        let fast = betti_table(&g, Q, &EngineConfig::default()).unwrap();
        let slow = betti_table(&g, Q, &EngineConfig::without_pruning()).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn minimal_vs_taylor(seed in any::<u64>(), n in 2usize..=8) {
        let g = antichain(seed, n, 6, 4);
        let cfg = EngineConfig::default();
        let m = betti_table(&g, Q, &cfg).unwrap();
        let t = taylor_table(&g, &cfg).unwrap();
        for ((i, a), v) in m.entries() {
            prop_assert!(v <= t.get(i, a));
        }
        for a in 0..=n {
            prop_assert_eq!(m.alternating_sum(a), t.alternating_sum(a));
            let gens = g.edges().iter().filter(|e| e.len() == a).count() as u64;
            prop_assert_eq!(m.get(0, a), gens);
        }
        prop_assert!(euler_consistency(&g, Q, &cfg).unwrap().passed());
    }

    #[test]
    fn link_and_antistar_match_complex(seed in any::<u64>(), n in 2usize..=8) {
        let g = antichain(seed, n, 5, 4);
        let all = faces(&g);
        for v in 1..=n {
            let star: BTreeSet<u64> = all.iter().copied().filter(|&f| f & VertexSet::singleton(v).bits() == 0).collect();
            prop_assert_eq!(faces(&g.antistar(v).unwrap()), star.clone());
            if let Ok(link) = g.link(v) {
                let bit = VertexSet::singleton(v).bits();
                let expected: BTreeSet<u64> = star.iter().copied().filter(|&f| all.contains(&(f | bit))).collect();
                prop_assert_eq!(faces(&link), expected);
            } else {
                prop_assert!(g.edges().contains(&VertexSet::singleton(v)));
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(seed in any::<u64>(), n in 1usize..=10) {
        let g = antichain(seed, n, 7, 4);
        let mut r = rng(seed ^ 0x5eed);
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut r);
        let h = g.relabeled(&perm).unwrap();
        prop_assert_eq!(CanonicalForm::of(&g), CanonicalForm::of(&h));
    }

    #[test]
    fn forest_search_matches_permutations(seed in any::<u64>(), t in 1usize..=5) {
        let g = random_hyperforest(&mut rng(seed), 3, t).unwrap();
        prop_assert!(g.is_hyperforest().unwrap());
        // an arbitrary antichain, checked against every edge order
        let h = antichain(seed, 6, t, 3);
        let brute = permutations(h.edge_count()).iter().any(|p| {
            let mut seen = VertexSet::EMPTY;
            p.iter().enumerate().all(|(k, &i)| {
                let e = h.edges()[i - 1];
                let ok = k == 0 || !e.difference(seen).is_empty();
                seen = seen.union(e);
                ok
            })
        });
        prop_assert_eq!(h.is_hyperforest().unwrap(), brute);
    }

    #[test]
    fn tree_search_matches_vertex_count(seed in any::<u64>(), t in 1usize..=6, d in 2usize..=3) {
        let n = d + t + 1;
        let mut r = rng(seed);
        let mut edges: Vec<Vec<usize>> = Vec::new();
        while edges.len() < t {
            let mut e: Vec<usize> = (1..=n).collect::<Vec<_>>().choose_multiple(&mut r, d).copied().collect();
            e.sort();
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        let g = Hypergraph::new(n, &edges, false).unwrap();
        // pure: a tree is a forest that covers exactly d + t - 1 vertices
        let rule = g.is_hyperforest().unwrap() && g.covered().len() == d + t - 1;
        prop_assert_eq!(g.is_hypertree().unwrap(), rule);
    }

    #[test]
    fn hypertree_coloring_is_unique(seed in any::<u64>(), d in 2usize..=3, n in 3usize..=8) {
        // hypertrees built edge by edge without regard to colors
        prop_assume!(n >= d);
        let mut r = rng(seed);
        let mut edges = vec![(1..=d).collect::<Vec<_>>()];
        for v in (d + 1)..=n {
            let mut e: Vec<usize> = (1..v).collect::<Vec<_>>().choose_multiple(&mut r, d - 1).copied().collect();
            e.push(v);
            e.sort();
            edges.push(e);
        }
        let g = Hypergraph::new(n, &edges, false).unwrap();
        prop_assert!(g.is_hypertree().unwrap());
        let found = g.proper_coloring(d).unwrap();
        if let Some(c) = &found {
            c.check_proper(&g, d).unwrap();
        }
        let classes = |color: &dyn Fn(usize) -> usize| -> BTreeSet<Vec<usize>> {
            (1..=d).map(|k| (1..=n).filter(|&v| color(v) == k).collect()).collect()
        };
        let mut assignment = vec![0usize; n];
        let mut proper_count = 0;
        for code in 0..d.pow(n as u32) {
            let mut x = code;
            for slot in assignment.iter_mut() {
                *slot = x % d + 1;
                x /= d;
            }
            let proper = g.edges().iter().all(|e| {
                let colors: BTreeSet<usize> = e.iter().map(|v| assignment[v - 1]).collect();
                colors.len() == e.len()
            });
            if proper {
                proper_count += 1;
                let c = found.as_ref().expect("a proper coloring exists but none was returned");
                prop_assert_eq!(classes(&|v| assignment[v - 1]), classes(&|v| c.color(v)));
            }
        }
        if found.is_some() {
            // the d! relabelings of one partition
            prop_assert_eq!(proper_count, (1..=d).product::<usize>());
        }
    }

    #[test]
    fn random_hypertrees_are_colorable(seed in any::<u64>(), d in 2usize..=4) {
        let mut r = rng(seed);
        let n = r.gen_range(d..=14);
        let g = random_hypertree(&mut r, d, n).unwrap();
        prop_assert!(g.is_hypertree().unwrap());
        prop_assert!(g.proper_coloring(d).unwrap().is_some());
    }
}

#[test]
fn canonical_form_matches_brute_force_isomorphism() {
    let mut r = rng(11);
    let mut graphs = Vec::new();
    for _ in 0..60 {
        let n = r.gen_range(3..=5);
        graphs.push(random_antichain(&mut r, n, 4, 3).unwrap());
    }
    let key = |g: &Hypergraph| {
        let mut e = g.edge_lists();
        e.sort();
        e
    };
    for a in &graphs {
        for b in &graphs {
            let iso = a.n() == b.n()
                && a.edge_count() == b.edge_count()
                && permutations(a.n()).iter().any(|p| key(&a.relabeled(p).unwrap()) == key(b));
            assert_eq!(CanonicalForm::of(a) == CanonicalForm::of(b), iso, "{a:?} vs {b:?}");
        }
    }
}
