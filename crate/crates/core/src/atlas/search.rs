use serde_json::json;

use super::canonical::CanonicalForm;
use super::enumerate::{enumerate_hypertrees, Augmenter, Growth, ProgressFn};
use super::{generate, FamilySpec};
use crate::betti::{hochster_graded_betti, taylor_graded_betti, EngineConfig};
use crate::bounds::{binomial, bound_value, nearly_even_partition, verify_bound, BoundParams, TheoremId};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::hypercomb::Hypergraph;
use crate::report::{Comparison, Relation, Report};

fn triples_span_six(g: &Hypergraph) -> bool {
    let e = g.edges();
    for a in 0..e.len() {
        for b in (a + 1)..e.len() {
            for c in (b + 1)..e.len() {
                if e[a].union(e[b]).union(e[c]).len() != 6 {
                    return false;
                }
            }
        }
    }
    true
}

fn survey_levels(t: usize, budget: u64, progress: Option<ProgressFn<'_>>) -> Result<Vec<Vec<Hypergraph>>> {
    let aug = Augmenter {
        sizes: 3..=3,
        growth: Growth::Antichain,
        keep: &triples_span_six,
        budget,
        progress,
    };
    aug.run(t)
}

/// Classes of `t` distinct 3-sets in which every three edges span exactly six
/// vertices, i.e. `β^T_{2,6} = C(t,3)`.
pub fn triple_union_survey(t: usize, budget: u64) -> Result<Vec<Hypergraph>> {
    triple_union_survey_with_progress(t, budget, None)
}

pub fn triple_union_survey_with_progress(
    t: usize,
    budget: u64,
    progress: Option<ProgressFn<'_>>,
) -> Result<Vec<Hypergraph>> {
    if t < 3 {
        return Err(Error::BadParams("the survey needs t >= 3".into()));
    }
    Ok(survey_levels(t, budget, progress)?.pop().expect("level t"))
}

/// Exhaustive check of the degree-3 uniqueness and nonexistence claims:
/// exactly one class with six generators reaches `β_{2,6} = 20`, and no
/// seven-generator class reaches `β^T_{2,6} = C(7,3)`.
pub fn reproduce_section4(
    field: FieldSpec,
    cfg: &EngineConfig,
    budget: u64,
    progress: Option<ProgressFn<'_>>,
) -> Result<Report> {
    let levels = survey_levels(7, budget, progress)?;
    let (six, seven) = (&levels[6], &levels[7]);
    let target = binomial(6, 3);
    let reference = CanonicalForm::of(&generate(&FamilySpec::Degree3Unique)?);
    let mut report = Report::new("section4");
    let mut survivors = Vec::new();
    for g in six {
        let beta = hochster_graded_betti(g, 2, 6, field, cfg)?;
        report.witnesses.push(json!({
            "t": 6,
            "edges": g.edge_lists(),
            "beta_2_6": beta,
            "taylor_2_6": taylor_graded_betti(g, 2, 6),
        }));
        if beta == target {
            survivors.push(g);
        }
    }
    let matches = survivors.len() == 1 && CanonicalForm::of(survivors[0]) == reference;
    report.push(Comparison::new(
        "t=6 classes with beta_2,6 = 20",
        Relation::Equal,
        1,
        survivors.len() as i64,
    ));
    report.push(Comparison::new(
        "t=6 survivor is isomorphic to degree3_unique",
        Relation::Equal,
        1,
        i64::from(matches),
    ));
    report.push(Comparison::new(
        "t=7 classes with beta^T_2,6 = 35",
        Relation::Equal,
        0,
        seven.len() as i64,
    ));
    let class_word = |k: usize| if k == 1 { "class" } else { "classes" };
    let tag = if matches { " (matches degree3_unique)" } else { "" };
    report.note(format!(
        "t=6: {} {}{tag}; t=7: {} {}",
        survivors.len(),
        class_word(survivors.len()),
        seven.len(),
        class_word(seven.len())
    ));
    report.note(format!(
        "survey at t=6: {} {} with beta^T_2,6 = 20; field {field}",
        six.len(),
        class_word(six.len())
    ));
    Ok(report)
}

/// Checks `β_{2,6} <= C(t,3) - Σ C(t_i,3)` over every degree-3 class (edges of
/// sizes 1..=3) with at most `t_max` edges, plus tightness on `b36_extremal`.
pub fn conjecture_scan(
    t_max: usize,
    field: FieldSpec,
    cfg: &EngineConfig,
    budget: u64,
    progress: Option<ProgressFn<'_>>,
) -> Result<Report> {
    let aug = Augmenter {
        sizes: 1..=3,
        growth: Growth::Antichain,
        keep: &|_| true,
        budget,
        progress,
    };
    let levels = aug.run(t_max)?;
    let mut report = Report::new(TheoremId::B36.as_str());
    report.evidence_only = true;
    for (t, level) in levels.iter().enumerate().skip(1) {
        let bound = bound_value(&BoundParams::B36 { t: t as u64 })?;
        let mut worst = 0u64;
        let mut classes = 0usize;
        let mut equal = 0usize;
        for g in level.iter().filter(|g| g.degree() == 3) {
            classes += 1;
            let beta = hochster_graded_betti(g, 2, 6, field, cfg)?;
            worst = worst.max(beta);
            if beta == bound && bound > 0 {
                equal += 1;
            }
            if beta > bound {
                report.witnesses.push(json!({ "violation": g.edge_lists(), "beta_2_6": beta }));
            }
        }
        report.push(Comparison::new(
            format!("t={t}: max beta_2,6 over {classes} classes"),
            Relation::AtMost,
            bound as i64,
            worst as i64,
        ));
        if t >= 3 {
            report.note(format!("t={t}: {equal} classes attain {bound}"));
            let parts = nearly_even_partition(t as u64, 3)?.parts;
            let spec = FamilySpec::B36Extremal {
                t1: parts[0] as usize,
                t2: parts[1] as usize,
                t3: parts[2] as usize,
            };
            let beta = hochster_graded_betti(&generate(&spec)?, 2, 6, field, cfg)?;
            report.push(Comparison::new(
                format!("{spec}: beta_2,6"),
                Relation::Equal,
                bound as i64,
                beta as i64,
            ));
        }
    }
    Ok(report)
}

/// Runs `diameter_eq` on every tree with `2..=max_vertices` vertices.
pub fn diameter_survey(
    max_vertices: usize,
    field: FieldSpec,
    cfg: &EngineConfig,
    budget: u64,
) -> Result<Report> {
    let mut report = Report::new(TheoremId::DiameterEq.as_str());
    let mut exceptions = 0i64;
    let mut trees = 0usize;
    for n in 2..=max_vertices {
        for tree in enumerate_hypertrees(2, n - 1, budget)? {
            trees += 1;
            let r = verify_bound(TheoremId::DiameterEq, &tree, field, cfg)?;
            if !r.passed() {
                exceptions += 1;
                report.witnesses.push(json!({ "edges": tree.edge_lists(), "notes": r.notes }));
            }
        }
    }
    report.push(Comparison::new(
        format!("exceptions over {trees} trees"),
        Relation::Equal,
        0,
        exceptions,
    ));
    Ok(report)
}
