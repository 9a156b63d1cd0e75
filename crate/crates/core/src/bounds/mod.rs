//! Closed-form Betti bounds and their verification against computed tables.
//!
//! * `tree_lb`: hypertree ideals satisfy `β_{j-1} >= Σ_i C(n_i, j)` over the
//!   color classes of the unique proper coloring.
//! * `forest_lb`: hyperforests with `t` edges satisfy the same bound with the
//!   nearly even `d`-partition of `t + d - 1`.
//! * `diameter_eq`: for trees, equality at every `j >= 2` iff diameter `<= 4`.
//! * `beta35`: pure degree-`d` ideals satisfy
//!   `β_{2,3d-1} <= C(t,3) - C(t_1,3) - C(t_2,3)`.
//! * `b36`: the open three-part analogue for `β_{2,6}` in degree 3.

mod turan;
mod witness;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

pub use turan::{turan_number, turan_number_with_budget};
pub use witness::{witness_subset, WitnessSubset};

use crate::betti::{
    betti_table, hochster_graded_betti, taylor_beta2_3dm1, EngineConfig,
};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::hypercomb::{Hypergraph, IntersectionGraph};
use crate::report::{Comparison, Relation, Report};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Parts pairwise within one of each other, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearlyEvenPartition {
    pub total: u64,
    pub parts: Vec<u64>,
}

impl NearlyEvenPartition {
    /// True when some part is zero (only possible when `total < parts`).
    pub fn has_zero_parts(&self) -> bool {
        self.parts.iter().any(|&p| p == 0)
    }

    pub fn binomial_sum(&self, j: u64) -> u64 {
        self.parts.iter().map(|&p| binomial(p, j)).sum()
    }
}

/// `⌈r/d⌉` repeated `r mod d` times, then `⌊r/d⌋`.
pub fn nearly_even_partition(r: u64, d: u64) -> Result<NearlyEvenPartition> {
    if d == 0 {
        return Err(Error::ZeroParts);
    }
    let (q, rem) = (r / d, r % d);
    let parts = (0..d).map(|i| if i < rem { q + 1 } else { q }).collect();
    Ok(NearlyEvenPartition { total: r, parts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    TreeLb,
    ForestLb,
    DiameterEq,
    Beta35,
    B36,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::TreeLb,
        TheoremId::ForestLb,
        TheoremId::DiameterEq,
        TheoremId::Beta35,
        TheoremId::B36,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::TreeLb => "tree_lb",
            TheoremId::ForestLb => "forest_lb",
            TheoremId::DiameterEq => "diameter_eq",
            TheoremId::Beta35 => "beta35",
            TheoremId::B36 => "b36",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown theorem `{s}`")))
    }
}

/// Parameters of a closed-form bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundParams {
    /// Color-class sizes and `j`.
    TreeLb { class_sizes: Vec<u64>, j: u64 },
    ForestLb { t: u64, d: u64, j: u64 },
    Beta35 { t: u64 },
    B36 { t: u64 },
}

/// Evaluates a bound. Lower bounds need `j >= 2`.
pub fn bound_value(params: &BoundParams) -> Result<u64> {
    match params {
        BoundParams::TreeLb { class_sizes, j } => {
            if *j < 2 || class_sizes.is_empty() {
                return Err(Error::BadParams("tree_lb needs j >= 2 and d >= 1".into()));
            }
            Ok(class_sizes.iter().map(|&n| binomial(n, *j)).sum())
        }
        BoundParams::ForestLb { t, d, j } => {
            if *j < 2 || *d == 0 || *t == 0 {
                return Err(Error::BadParams(
                    "forest_lb needs j >= 2, d >= 1 and t >= 1".into(),
                ));
            }
            Ok(nearly_even_partition(t + d - 1, *d)?.binomial_sum(*j))
        }
        BoundParams::Beta35 { t } => {
            let p = nearly_even_partition(*t, 2)?;
            Ok(binomial(*t, 3) - p.binomial_sum(3))
        }
        BoundParams::B36 { t } => {
            let p = nearly_even_partition(*t, 3)?;
            Ok(binomial(*t, 3) - p.binomial_sum(3))
        }
    }
}

/// Number of 3-vertex subsets inducing exactly one edge.
pub fn p_count(g: &IntersectionGraph) -> u64 {
    let n = g.order();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let e = u8::from(g.adjacent(a, b))
                    + u8::from(g.adjacent(a, c))
                    + u8::from(g.adjacent(b, c));
                if e == 1 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// The inequality chain bounding the Taylor count through the intersection graph:
/// `β^T_{2,3d-1} <= P(G') <= ½ Σ_v deg v (t-1-deg v) <= ½ t a (t-1-a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionChain {
    pub t: u64,
    pub taylor: u64,
    pub p: u64,
    /// `Σ_v deg v (t - 1 - deg v)`, twice the third term.
    pub degree_sum: u64,
    /// Edges of `G'`; the average degree is `2 * edges / t`.
    pub edges: u64,
}

impl IntersectionChain {
    pub fn of(g: &Hypergraph) -> Result<Self> {
        let taylor = taylor_beta2_3dm1(g)?;
        let ig = g.intersection_graph();
        let t = ig.order() as u64;
        let degree_sum = (0..ig.order())
            .map(|v| {
                let d = ig.degree(v) as u64;
                d * (t - 1 - d)
            })
            .sum();
        Ok(IntersectionChain {
            t,
            taylor,
            p: p_count(&ig),
            degree_sum,
            edges: ig.edge_count() as u64,
        })
    }

    /// The three links as integer comparisons. The average-degree link is scaled
    /// by `2t`: `t Σ deg(t-1-deg) <= 2m (t(t-1) - 2m)` with `m = |E(G')|`.
    pub fn comparisons(&self) -> Vec<Comparison> {
        let (t, m) = (self.t as i64, self.edges as i64);
        vec![
            Comparison::new("beta^T <= P(G')", Relation::AtMost, self.p as i64, self.taylor as i64),
            Comparison::new(
                "2 P(G') <= sum deg(t-1-deg)",
                Relation::AtMost,
                self.degree_sum as i64,
                2 * self.p as i64,
            ),
            Comparison::new(
                "t sum deg(t-1-deg) <= 2m(t(t-1)-2m)",
                Relation::AtMost,
                2 * m * (t * (t - 1) - 2 * m),
                t * self.degree_sum as i64,
            ),
        ]
    }
}

fn require_hypertree(g: &Hypergraph) -> Result<()> {
    if g.edge_count() == 0 || g.tree_ordering()?.is_none() {
        return Err(Error::NotAHypertree);
    }
    Ok(())
}

/// Verifies one theorem on `g`, computing Betti numbers over `field`.
pub fn verify_bound(
    theorem: TheoremId,
    g: &Hypergraph,
    field: FieldSpec,
    cfg: &EngineConfig,
) -> Result<Report> {
    match theorem {
        TheoremId::TreeLb => verify_tree_lb(g, field, cfg),
        TheoremId::ForestLb => verify_forest_lb(g, field, cfg),
        TheoremId::DiameterEq => verify_diameter_eq(g, field, cfg),
        TheoremId::Beta35 => verify_beta35(g, field, cfg),
        TheoremId::B36 => verify_b36(g, field, cfg),
    }
}

/// Color-class sizes of the hypertree coloring, counting covered vertices only.
pub fn hypertree_class_sizes(g: &Hypergraph) -> Result<Vec<u64>> {
    require_hypertree(g)?;
    let d = g.degree();
    let coloring = g
        .proper_coloring(d)?
        .ok_or_else(|| Error::ImproperColoring(format!("hypertree has no proper {d}-coloring")))?;
    Ok(coloring
        .class_sizes(d, g.covered())
        .into_iter()
        .map(|s| s as u64)
        .collect())
}

fn push_lower_bounds(report: &mut Report, totals: &[u64], bounds: impl Iterator<Item = (u64, u64)>) {
    for (j, bound) in bounds {
        let computed = totals.get(j as usize - 1).copied().unwrap_or(0);
        report.push(Comparison::new(
            format!("j={j}: beta_{}", j - 1),
            Relation::AtLeast,
            bound as i64,
            computed as i64,
        ));
    }
}

fn verify_tree_lb(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<Report> {
    let sizes = hypertree_class_sizes(g)?;
    let totals = betti_table(g, field, cfg)?.total();
    let mut report = Report::new(TheoremId::TreeLb.as_str());
    let top = sizes.iter().copied().max().unwrap_or(0);
    push_lower_bounds(
        &mut report,
        &totals,
        (2..=top).map(|j| (j, sizes.iter().map(|&n| binomial(n, j)).sum())),
    );
    report.witnesses.push(json!({ "color_class_sizes": sizes }));
    Ok(report)
}

fn verify_forest_lb(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<Report> {
    if g.edge_count() == 0 || g.forest_ordering()?.is_none() {
        return Err(Error::NotAHyperforest);
    }
    let (t, d) = (g.edge_count() as u64, g.degree() as u64);
    let partition = nearly_even_partition(t + d - 1, d)?;
    let totals = betti_table(g, field, cfg)?.total();
    let mut report = Report::new(TheoremId::ForestLb.as_str());
    let top = partition.parts.iter().copied().max().unwrap_or(0);
    push_lower_bounds(
        &mut report,
        &totals,
        (2..=top).map(|j| (j, partition.binomial_sum(j))),
    );
    report.witnesses.push(json!({ "partition": partition.parts }));
    Ok(report)
}

fn verify_diameter_eq(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<Report> {
    if g.degree() != 2 || !g.is_pure() {
        return Err(Error::NotAGraph);
    }
    let diameter = g.diameter()?;
    require_hypertree(g)?;
    let sizes = hypertree_class_sizes(g)?;
    let (n1, n2) = (sizes[0], sizes[1]);
    let totals = betti_table(g, field, cfg)?.total();
    let mut report = Report::new(TheoremId::DiameterEq.as_str());
    let n = g.n() as u64;
    push_lower_bounds(
        &mut report,
        &totals,
        (2..=n.max(2)).map(|j| (j, binomial(n1, j) + binomial(n2, j))),
    );
    let first_strict = report
        .comparisons
        .iter()
        .find(|c| c.is_strict())
        .map(|c| (c.label.clone(), c.computed, c.bound));
    let equality = first_strict.is_none() && report.passed();
    let small = diameter <= 4;
    report.push(Comparison::new(
        "equality for all j >= 2 iff diameter <= 4",
        Relation::Equal,
        i64::from(small),
        i64::from(equality),
    ));
    let rel = if small { "<=" } else { ">" };
    let detail = match &first_strict {
        Some((label, c, b)) => format!(
            "strict inequality at {} ({c} > {b})",
            label.split(':').next().unwrap_or(label)
        ),
        None => "equality at every j >= 2".to_string(),
    };
    report.note(format!("diameter {diameter} {rel} 4; {detail}"));
    report
        .witnesses
        .push(json!({ "diameter": diameter, "n1": n1, "n2": n2 }));
    Ok(report)
}

fn verify_beta35(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<Report> {
    if !g.is_pure() || g.edge_count() == 0 {
        return Err(Error::NotPure);
    }
    let (t, d) = (g.edge_count() as u64, g.degree());
    let bound = bound_value(&BoundParams::Beta35 { t })?;
    let beta = hochster_graded_betti(g, 2, 3 * d - 1, field, cfg)?;
    let chain = IntersectionChain::of(g)?;
    let mut report = Report::new(TheoremId::Beta35.as_str());
    report.push(Comparison::new(
        format!("beta_2,{}", 3 * d - 1),
        Relation::AtMost,
        bound as i64,
        beta as i64,
    ));
    report.push(Comparison::new(
        "beta <= beta^T",
        Relation::AtMost,
        chain.taylor as i64,
        beta as i64,
    ));
    report.push(Comparison::new(
        "beta^T <= bound",
        Relation::AtMost,
        bound as i64,
        chain.taylor as i64,
    ));
    for c in chain.comparisons() {
        report.push(c);
    }
    report.witnesses.push(serde_json::to_value(&chain).expect("chain serializes"));
    Ok(report)
}

fn verify_b36(g: &Hypergraph, field: FieldSpec, cfg: &EngineConfig) -> Result<Report> {
    if g.degree() != 3 {
        return Err(Error::Precondition("b36 needs a degree 3 ideal".into()));
    }
    let t = g.edge_count() as u64;
    let bound = bound_value(&BoundParams::B36 { t })?;
    let beta = hochster_graded_betti(g, 2, 6, field, cfg)?;
    let mut report = Report::new(TheoremId::B36.as_str());
    report.evidence_only = true;
    report.push(Comparison::new("beta_2,6", Relation::AtMost, bound as i64, beta as i64));
    if (7..=10).contains(&t) {
        let turan = turan_number(t as usize, 7, 3)?;
        report.note(format!(
            "informational: beta_2,6 = {beta} <= C({t},3) - T({t},7,3) = {}",
            binomial(t, 3) - turan
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let raw: Vec<Vec<usize>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::new(n, &raw, false).unwrap()
    }

    fn path(n: usize) -> Hypergraph {
        let raw: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
        Hypergraph::new(n, &raw, false).unwrap()
    }

    #[test]
    fn partitions() {
        assert_eq!(nearly_even_partition(7, 3).unwrap().parts, vec![3, 2, 2]);
        assert_eq!(nearly_even_partition(4, 2).unwrap().parts, vec![2, 2]);
        assert_eq!(nearly_even_partition(6, 3).unwrap().parts, vec![2, 2, 2]);
        let p = nearly_even_partition(2, 3).unwrap();
        assert_eq!(p.parts, vec![1, 1, 0]);
        assert!(p.has_zero_parts());
        assert_eq!(nearly_even_partition(3, 0), Err(Error::ZeroParts));
    }

    #[test]
    fn bound_values() {
        let tree = BoundParams::TreeLb { class_sizes: vec![1, 3], j: 2 };
        assert_eq!(bound_value(&tree).unwrap(), 3);
        assert_eq!(bound_value(&BoundParams::Beta35 { t: 6 }).unwrap(), 18);
        assert_eq!(bound_value(&BoundParams::B36 { t: 6 }).unwrap(), 20);
        assert_eq!(bound_value(&BoundParams::ForestLb { t: 3, d: 2, j: 2 }).unwrap(), 2);
        assert!(bound_value(&BoundParams::TreeLb { class_sizes: vec![3], j: 1 }).is_err());
    }

    #[test]
    fn path_six_tree_lb_is_strict_at_two() {
        let r = verify_bound(TheoremId::TreeLb, &path(6), FieldSpec::Rationals, &EngineConfig::default())
            .unwrap();
        assert!(r.passed());
        let j2 = &r.comparisons[0];
        assert_eq!((j2.computed, j2.bound), (7, 6));
        assert_eq!(j2.verdict, Verdict::Holds);
    }

    #[test]
    fn diameter_eq_cases() {
        let cfg = EngineConfig::default();
        let star = hg(4, &[&[1, 2], &[1, 3], &[1, 4]]);
        let r = verify_bound(TheoremId::DiameterEq, &star, FieldSpec::Rationals, &cfg).unwrap();
        assert!(r.passed());
        assert!(r.notes[0].starts_with("diameter 2 <= 4; equality"));
        let r = verify_bound(TheoremId::DiameterEq, &path(6), FieldSpec::Rationals, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.notes[0], "diameter 5 > 4; strict inequality at j=2 (7 > 6)");
    }

    #[test]
    fn preconditions() {
        let cfg = EngineConfig::default();
        let tri = hg(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let q = FieldSpec::Rationals;
        assert_eq!(verify_bound(TheoremId::TreeLb, &tri, q, &cfg), Err(Error::NotAHypertree));
        assert_eq!(verify_bound(TheoremId::ForestLb, &tri, q, &cfg), Err(Error::NotAHyperforest));
        let mixed = hg(3, &[&[1, 2], &[3]]);
        assert_eq!(verify_bound(TheoremId::Beta35, &mixed, q, &cfg), Err(Error::NotPure));
        assert!(verify_bound(TheoremId::B36, &tri, q, &cfg).is_err());
        assert_eq!(verify_bound(TheoremId::DiameterEq, &tri, q, &cfg), Err(Error::NotAHypertree));
    }

    #[test]
    fn beta35_extremal_small() {
        let g = hg(5, &[&[1, 3], &[1, 4], &[2, 5]]);
        let r = verify_bound(TheoremId::Beta35, &g, FieldSpec::Rationals, &EngineConfig::default())
            .unwrap();
        assert!(r.passed());
        assert_eq!(r.comparisons[0].verdict, Verdict::HoldsWithEquality);
    }

    #[test]
    fn p_counts() {
        assert_eq!(p_count(&IntersectionGraph::from_edges(3, &[(0, 1)])), 1);
        assert_eq!(p_count(&IntersectionGraph::from_edges(3, &[(0, 1), (1, 2)])), 0);
        let k4: Vec<(usize, usize)> = (0..4)
            .flat_map(|a| ((a + 1)..4).map(move |b| (a, b)))
            .collect();
        assert_eq!(p_count(&IntersectionGraph::from_edges(4, &k4)), 0);
    }

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }
}
