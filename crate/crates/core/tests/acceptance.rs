//! The ten acceptance criteria, run in order. Each prints one
//! `PASS`/`FAIL` line with its runtime; the test fails if any criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use bettilab::atlas::random::{random_antichain, random_hyperforest, random_hypertree, random_pure, rng};
use bettilab::atlas::{
    conjecture_scan, diameter_survey, enumerate_pure_hypergraphs, generate, reproduce_section4, FamilySpec,
    DEFAULT_BUDGET,
};
use bettilab::betti::{betti_table, hochster_graded_betti, taylor_table, EngineConfig};
use bettilab::bounds::{
    binomial, bound_value, nearly_even_partition, verify_bound, witness_subset, BoundParams, IntersectionChain,
    TheoremId,
};
use bettilab::homology::{reduced_betti, reduced_betti_all, reduced_euler, DEFAULT_FACE_CAP};
use bettilab::hypercomb::subsets_of_size;
use bettilab::{FieldSpec, Hypergraph, Verdict, VertexSet};
use rand::Rng;

const Q: FieldSpec = FieldSpec::Rationals;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn path_on_six() -> Check {
    let g = generate(&FamilySpec::Path { n: 6 }).map_err(fail)?;
    let beta1 = betti_table(&g, Q, &EngineConfig::default()).map_err(fail)?.total_at(1);
    let bound = bound_value(&BoundParams::TreeLb { class_sizes: vec![3, 3], j: 2 }).map_err(fail)?;
    ensure(beta1 == 7 && bound == 6, || format!("beta_1 = {beta1}, bound = {bound}"))?;
    let r = verify_bound(TheoremId::TreeLb, &g, Q, &EngineConfig::default()).map_err(fail)?;
    ensure(r.verdict() == Verdict::Holds, || r.to_text())?;
    Ok(format!("beta_1 = {beta1} > {bound}"))
}

fn diameter_biconditional() -> Check {
    let r = diameter_survey(9, Q, &EngineConfig::default(), DEFAULT_BUDGET).map_err(fail)?;
    ensure(r.passed(), || r.to_text())?;
    Ok(r.comparisons[0].label.clone())
}

fn tree_lower_bound() -> Check {
    let cfg = EngineConfig::default();
    let mut r = rng(3);
    for k in 0..500 {
        let d = 2 + k % 3;
        let n = r.gen_range(d..=14);
        let g = random_hypertree(&mut r, d, n).map_err(fail)?;
        let rep = verify_bound(TheoremId::TreeLb, &g, Q, &cfg).map_err(fail)?;
        ensure(rep.passed(), || format!("{:?}\n{}", g.edge_lists(), rep.to_text()))?;
    }
    let mut extremal = 0;
    for d in 2..=3u32 {
        for code in 0..4usize.pow(d) {
            let sizes: Vec<usize> = (0..d).map(|i| code / 4usize.pow(i) % 4 + 1).collect();
            let g = generate(&FamilySpec::ExtremalHypertree { sizes: sizes.clone() }).map_err(fail)?;
            let rep = verify_bound(TheoremId::TreeLb, &g, Q, &cfg).map_err(fail)?;
            let equal = rep.comparisons.iter().all(|c| c.verdict == Verdict::HoldsWithEquality);
            ensure(equal, || format!("extremal {sizes:?}\n{}", rep.to_text()))?;
            extremal += 1;
        }
    }
    Ok(format!("500 random hypertrees hold; {extremal} extremal hypertrees attain equality"))
}

fn forest_lower_bound() -> Check {
    let cfg = EngineConfig::default();
    let mut r = rng(4);
    for _ in 0..200 {
        let d = r.gen_range(1..=3);
        let t = r.gen_range(1..=6);
        let g = random_hyperforest(&mut r, d, t).map_err(fail)?;
        let rep = verify_bound(TheoremId::ForestLb, &g, Q, &cfg).map_err(fail)?;
        ensure(rep.passed(), || format!("{:?}\n{}", g.edge_lists(), rep.to_text()))?;
    }
    Ok("200 random hyperforests hold".into())
}

fn beta35() -> Check {
    let cfg = EngineConfig::default();
    let check = |g: &Hypergraph| -> Result<(), String> {
        let rep = verify_bound(TheoremId::Beta35, g, Q, &cfg).map_err(fail)?;
        ensure(rep.passed(), || format!("{:?}\n{}", g.edge_lists(), rep.to_text()))?;
        let chain = IntersectionChain::of(g).map_err(fail)?;
        let links = chain.comparisons();
        ensure(links.len() == 3 && links.iter().all(|c| c.verdict != Verdict::Violated), || {
            format!("chain on {:?}: {links:?}", g.edge_lists())
        })
    };
    let mut graphs = 0;
    for t in 1..=6 {
        for g in enumerate_pure_hypergraphs(2, t, DEFAULT_BUDGET).map_err(fail)? {
            check(&g)?;
            graphs += 1;
        }
    }
    let mut r = rng(5);
    for _ in 0..200 {
        let t = r.gen_range(1..=7);
        let lo = (3..).find(|&n| binomial(n as u64, 3) >= t as u64).unwrap();
        let n = r.gen_range(lo..=12);
        check(&random_pure(&mut r, 3, t, n).map_err(fail)?)?;
    }
    for t in 1..=8u64 {
        let p = nearly_even_partition(t, 2).map_err(fail)?.parts;
        let spec = FamilySpec::Beta35Extremal { t1: p[0] as usize, t2: p[1] as usize };
        let g = generate(&spec).map_err(fail)?;
        let beta = hochster_graded_betti(&g, 2, 5, Q, &cfg).map_err(fail)?;
        let bound = bound_value(&BoundParams::Beta35 { t }).map_err(fail)?;
        ensure(beta == bound, || format!("{spec}: beta_2,5 = {beta}, bound {bound}"))?;
        check(&g)?;
    }
    Ok(format!("{graphs} graph classes, 200 random triple systems, extremal t <= 8"))
}

fn section4() -> Check {
    let r = reproduce_section4(Q, &EngineConfig::default(), DEFAULT_BUDGET, None).map_err(fail)?;
    ensure(r.passed(), || r.to_text())?;
    Ok(r.notes[0].clone())
}

fn taylor_equality() -> Check {
    let cfg = EngineConfig::default();
    let mut cases = 0;
    for d in 2..=4 {
        for rr in 1..d {
            for t in 1..=5 {
                let g = generate(&FamilySpec::TaylorEquality { d, r: rr, t }).map_err(fail)?;
                let minimal = betti_table(&g, Q, &cfg).map_err(fail)?;
                let taylor = taylor_table(&g, &cfg).map_err(fail)?;
                for i in 1..=t {
                    let want = binomial(t as u64, i as u64);
                    let a = d + (i - 1) * rr;
                    let (m, tt) = (minimal.get(i - 1, a), taylor.get(i - 1, a));
                    ensure(m == want && tt == want, || {
                        format!("d={d} r={rr} t={t} i={i}: minimal {m}, taylor {tt}, want {want}")
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} parameter sets"))
}

fn conjecture_b36() -> Check {
    let cfg = EngineConfig::default();
    let r = conjecture_scan(4, Q, &cfg, DEFAULT_BUDGET, None).map_err(fail)?;
    ensure(r.passed() && r.evidence_only, || r.to_text())?;
    for t in 1..=6u64 {
        let p = nearly_even_partition(t, 3).map_err(fail)?.parts;
        let spec = FamilySpec::B36Extremal { t1: p[0] as usize, t2: p[1] as usize, t3: p[2] as usize };
        let beta = hochster_graded_betti(&generate(&spec).map_err(fail)?, 2, 6, Q, &cfg).map_err(fail)?;
        let bound = bound_value(&BoundParams::B36 { t }).map_err(fail)?;
        ensure(beta == bound, || format!("{spec}: beta_2,6 = {beta}, bound {bound}"))?;
    }
    Ok("no violations for t <= 4 (evidence); extremal equality for t <= 6".into())
}

fn engine_invariants() -> Check {
    let cfg = EngineConfig::default();
    let mut r = rng(9);
    for _ in 0..300 {
        let n = r.gen_range(1..=9);
        let g = random_antichain(&mut r, n, 7, 4).map_err(fail)?;
        let m = betti_table(&g, Q, &cfg).map_err(fail)?;
        let t = taylor_table(&g, &cfg).map_err(fail)?;
        for a in 0..=n {
            let gens = g.edges().iter().filter(|e| e.len() == a).count() as u64;
            ensure(m.get(0, a) == gens, || format!("anchor at a={a} on {:?}", g.edge_lists()))?;
            ensure(m.alternating_sum(a) == t.alternating_sum(a), || {
                format!("alternating sum at a={a} on {:?}", g.edge_lists())
            })?;
        }
        for ((i, a), v) in m.entries() {
            ensure(v <= t.get(i, a), || format!("beta_{i},{a} > taylor on {:?}", g.edge_lists()))?;
        }
        let k = g.complex();
        let h = reduced_betti(&k, Q, DEFAULT_FACE_CAP).map_err(fail)?;
        let chi = reduced_euler(&k, DEFAULT_FACE_CAP).map_err(fail)?;
        ensure(h.euler() == chi, || format!("Euler-Poincare on {:?}", g.edge_lists()))?;
        for w in subsets_of_size(g.vertices(), n.min(3)) {
            let sub = k.restrict(w);
            let hw = reduced_betti_all(&sub, Q, DEFAULT_FACE_CAP).map_err(fail)?;
            ensure(hw.euler() == reduced_euler(&sub, DEFAULT_FACE_CAP).map_err(fail)?, || {
                format!("Euler-Poincare on a restriction of {:?}", g.edge_lists())
            })?;
        }
    }
    for _ in 0..100 {
        let n = r.gen_range(2..=9);
        let g = random_antichain(&mut r, n, 8, 4).map_err(fail)?;
        let k = g.complex();
        let q = reduced_betti_all(&k, Q, DEFAULT_FACE_CAP).map_err(fail)?;
        for p in [2u64, 3, 5] {
            let fp = reduced_betti_all(&k, FieldSpec::PrimeField(p), DEFAULT_FACE_CAP).map_err(fail)?;
            for deg in -1..n as i64 {
                ensure(fp.dim(deg) >= q.dim(deg), || format!("GF({p}) < Q on {:?}", g.edge_lists()))?;
            }
        }
    }
    for _ in 0..100 {
        let n = r.gen_range(2..=10);
        let g = random_antichain(&mut r, n, 8, 4).map_err(fail)?;
        let fast = betti_table(&g, Q, &cfg).map_err(fail)?;
        let slow = betti_table(&g, Q, &EngineConfig::without_pruning()).map_err(fail)?;
        ensure(fast == slow, || format!("cone pruning changed the table of {:?}", g.edge_lists()))?;
    }
    Ok("300 anchored ideals, 100 field comparisons, 100 pruning comparisons".into())
}

fn witness() -> Check {
    let mut r = rng(10);
    let mut calls = 0;
    for _ in 0..100 {
        let d = r.gen_range(2..=3);
        let n = r.gen_range(d + 1..=12);
        let g = random_hypertree(&mut r, d, n).map_err(fail)?;
        let coloring = g.proper_coloring(d).map_err(fail)?.ok_or("hypertree without a coloring")?;
        let blue = r.gen_range(1..=d);
        let class = coloring.class(blue).intersection(g.covered());
        for size in 1..=3.min(class.len()) {
            for bp in subsets_of_size(class, size) {
                let ws = witness_subset(&g, &coloring, blue, bp).map_err(|e| format!("{:?}: {e}", g.edge_lists()))?;
                let u: VertexSet = ws.u_prime.iter().copied().collect();
                ensure(u.intersection(class) == bp, || format!("U' n B != B' on {:?}", g.edge_lists()))?;
                let dim = (u.len() - bp.len()) as i64 - 1;
                let h = reduced_betti_all(&g.complex().restrict(u), Q, DEFAULT_FACE_CAP).map_err(fail)?;
                ensure(h.dim(dim) >= 1, || format!("homology vanished for U' = {:?}", ws.u_prime))?;
                calls += 1;
            }
        }
    }
    Ok(format!("{calls} witness subsets verified"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check, u64); 10] = [
        ("1 path on six vertices", path_on_six, 1),
        ("2 diameter biconditional", diameter_biconditional, 300),
        ("3 hypertree lower bound", tree_lower_bound, 600),
        ("4 hyperforest lower bound", forest_lower_bound, 600),
        ("5 beta_2,3d-1 upper bound", beta35, 600),
        ("6 degree-3 survey", section4, 1800),
        ("7 Taylor equality family", taylor_equality, 120),
        ("8 b36 evidence", conjecture_b36, 1200),
        ("9 engine invariants", engine_invariants, 900),
        ("10 witness subsets", witness, 600),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed < Duration::from_secs(limit) {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit}s"))
            }
        });
        // written past the test harness capture so the summary always shows
        let line = match &result {
            Ok(msg) => format!("PASS {name} ({elapsed:.2?}): {msg}\n"),
            Err(msg) => format!("FAIL {name} ({elapsed:.2?}): {msg}\n"),
        };
        out.write_all(line.as_bytes()).unwrap();
        out.flush().unwrap();
        if result.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
