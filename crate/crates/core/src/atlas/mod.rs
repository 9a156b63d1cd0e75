//! Named example families, canonical forms, isomorph-free enumeration and the
//! exhaustive searches built on them.

mod canonical;
mod enumerate;
pub mod random;
mod search;

use std::fmt;

use serde::Serialize;

pub use canonical::{canonical_hypergraph, canonical_labeling, is_isomorphic, CanonicalForm, CanonicalLabeling};
pub use enumerate::{
    enumerate_hypergraphs_up_to_degree, enumerate_hypertrees, enumerate_pure_hypergraphs,
    enumerate_pure_hypergraphs_with_progress, ProgressFn, SearchProgress, DEFAULT_BUDGET,
};
pub use search::{
    conjecture_scan, diameter_survey, reproduce_section4, triple_union_survey,
    triple_union_survey_with_progress,
};

use crate::error::{Error, Result};
use crate::hypercomb::{Hypergraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Hypertree with color classes of sizes `sizes[0..d]` attaining the tree bound.
    ExtremalHypertree { sizes: Vec<usize> },
    Path { n: usize },
    Beta35Extremal { t1: usize, t2: usize },
    TaylorEquality { d: usize, r: usize, t: usize },
    Degree3Unique,
    B36Extremal { t1: usize, t2: usize, t3: usize },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 6] = [
        "extremal_hypertree",
        "path",
        "beta35_extremal",
        "taylor_equality",
        "degree3_unique",
        "b36_extremal",
    ];

    /// Builds a spec from a family name and its integer parameters.
    pub fn from_args(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!(
                    "{name} takes {k} parameters, got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "extremal_hypertree" => FamilySpec::ExtremalHypertree { sizes: params.to_vec() },
            "path" => {
                want(1)?;
                FamilySpec::Path { n: params[0] }
            }
            "beta35_extremal" => {
                want(2)?;
                FamilySpec::Beta35Extremal { t1: params[0], t2: params[1] }
            }
            "taylor_equality" => {
                want(3)?;
                FamilySpec::TaylorEquality { d: params[0], r: params[1], t: params[2] }
            }
            "degree3_unique" => {
                want(0)?;
                FamilySpec::Degree3Unique
            }
            "b36_extremal" => {
                want(3)?;
                FamilySpec::B36Extremal { t1: params[0], t2: params[1], t3: params[2] }
            }
            _ => return Err(Error::BadParams(format!("unknown family `{name}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::ExtremalHypertree { .. } => "extremal_hypertree",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Beta35Extremal { .. } => "beta35_extremal",
            FamilySpec::TaylorEquality { .. } => "taylor_equality",
            FamilySpec::Degree3Unique => "degree3_unique",
            FamilySpec::B36Extremal { .. } => "b36_extremal",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::ExtremalHypertree { sizes } => sizes.clone(),
            FamilySpec::Path { n } => vec![*n],
            FamilySpec::Beta35Extremal { t1, t2 } => vec![*t1, *t2],
            FamilySpec::TaylorEquality { d, r, t } => vec![*d, *r, *t],
            FamilySpec::Degree3Unique => vec![],
            FamilySpec::B36Extremal { t1, t2, t3 } => vec![*t1, *t2, *t3],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::BadParams(m.to_string()));
        match self {
            FamilySpec::ExtremalHypertree { sizes } => {
                if sizes.len() < 2 {
                    return bad("extremal_hypertree needs d >= 2 class sizes");
                }
                if sizes.contains(&0) {
                    return bad("extremal_hypertree needs every n_i >= 1");
                }
                if sizes.iter().sum::<usize>() > 64 {
                    return bad("extremal_hypertree has more than 64 vertices");
                }
            }
            FamilySpec::Path { n } => {
                if *n == 0 || *n > 64 {
                    return bad("path needs 1 <= n <= 64");
                }
            }
            FamilySpec::Beta35Extremal { t1, t2 } => {
                if t1 + t2 == 0 || t1 + t2 + 2 > 64 {
                    return bad("beta35_extremal needs 1 <= t1 + t2 <= 62");
                }
            }
            FamilySpec::TaylorEquality { d, r, t } => {
                if *r == 0 || r >= d {
                    return bad("taylor_equality needs 1 <= r < d");
                }
                if *t == 0 || d - r + r * t > 64 {
                    return bad("taylor_equality needs t >= 1 and at most 64 vertices");
                }
            }
            FamilySpec::Degree3Unique => {}
            FamilySpec::B36Extremal { t1, t2, t3 } => {
                if t1 + t2 + t3 == 0 || t1 + t2 + t3 + 3 > 64 {
                    return bad("b36_extremal needs 1 <= t1 + t2 + t3 <= 61");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// Builds the family member. Vertices are numbered in the order the
/// construction names them.
pub fn generate(spec: &FamilySpec) -> Result<Hypergraph> {
    spec.validate()?;
    let (n, edges): (usize, Vec<VertexSet>) = match spec {
        FamilySpec::ExtremalHypertree { sizes } => {
            // v_i = i, then the u_{i,j} class by class
            let d = sizes.len();
            let core = VertexSet::full(d);
            let mut edges = vec![core];
            let mut next = d + 1;
            for (i, &ni) in sizes.iter().enumerate() {
                for _ in 1..ni {
                    edges.push(core.without(i + 1).with(next));
                    next += 1;
                }
            }
            (next - 1, edges)
        }
        FamilySpec::Path { n } => (*n, (1..*n).map(|i| set(&[i, i + 1])).collect()),
        FamilySpec::Beta35Extremal { t1, t2 } => {
            // u_1 = 1, u_2 = 2, then v's and w's
            let mut edges: Vec<VertexSet> = (0..*t1).map(|k| set(&[1, 3 + k])).collect();
            edges.extend((0..*t2).map(|k| set(&[2, 3 + t1 + k])));
            (2 + t1 + t2, edges)
        }
        FamilySpec::TaylorEquality { d, r, t } => {
            let common = VertexSet::full(d - r);
            let edges = (0..*t)
                .map(|a| {
                    let start = d - r + a * r;
                    (start + 1..=start + r).fold(common, |s, v| s.with(v))
                })
                .collect();
            (d - r + r * t, edges)
        }
        FamilySpec::Degree3Unique => (
            9,
            [[1, 2, 4], [1, 2, 5], [1, 3, 6], [1, 3, 7], [2, 3, 8], [2, 3, 9]]
                .iter()
                .map(|e| set(e))
                .collect(),
        ),
        FamilySpec::B36Extremal { t1, t2, t3 } => {
            // x = 1, 2, 3 then the y, z and w blocks
            let mut edges = Vec::new();
            let mut next = 4;
            for (pair, count) in [([1, 2], t1), ([1, 3], t2), ([2, 3], t3)] {
                for _ in 0..*count {
                    edges.push(set(&[pair[0], pair[1], next]));
                    next += 1;
                }
            }
            (next - 1, edges)
        }
    };
    Hypergraph::from_sets(VertexSet::full(n), edges, false)
}
