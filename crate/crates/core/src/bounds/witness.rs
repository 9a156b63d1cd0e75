use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{reduced_betti_induced, FieldSpec, DEFAULT_FACE_CAP};
use crate::hypercomb::{link_edges, Coloring, Hypergraph, VertexSet};

/// A vertex subset `U′ = W ∪ B′` whose induced complex has nonzero reduced
/// homology in degree `|U′| - |B′| - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSubset {
    pub u_prime: Vec<usize>,
    pub b_prime: Vec<usize>,
    /// Non-blue vertices in the order they were picked.
    pub w: Vec<usize>,
    pub homology_degree: i64,
    /// `β̃` in that degree over the rationals.
    pub reduced_betti: u64,
}

/// Builds `U′` for a nonempty subset `B′` of color class `blue`.
///
/// Starting from `Ũ = V - (B - B′)`, alternately deletes every non-blue `u`
/// whose removal keeps each blue vertex in some edge (smallest index first),
/// then takes the link at a non-blue `u` that lies on every edge through some
/// blue vertex. The picked vertices form `W`.
pub fn witness_subset(
    g: &Hypergraph,
    coloring: &Coloring,
    blue: usize,
    b_prime: VertexSet,
) -> Result<WitnessSubset> {
    if g.edge_count() == 0 || !g.is_hypertree()? {
        return Err(Error::NotAHypertree);
    }
    let d = g.degree();
    coloring.check_proper(g, d)?;
    if g.edge_count() == 1 {
        return Err(Error::NotApplicable(
            "a single edge is the base case of the induction".into(),
        ));
    }
    let v = g.covered();
    let b = coloring.class(blue).intersection(v);
    if blue == 0 || blue > d {
        return Err(Error::BadParams(format!("blue color {blue} outside 1..={d}")));
    }
    if b_prime.is_empty() || !b_prime.is_subset(b) {
        return Err(Error::Precondition(
            "B′ must be a nonempty subset of the blue color class".into(),
        ));
    }

    let mut u_tilde = v.difference(b.difference(b_prime));
    let mut edges: Vec<VertexSet> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| e.is_subset(u_tilde))
        .collect();
    let mut w = Vec::new();

    loop {
        // Step 1, to exhaustion
        while let Some(u) = u_tilde.difference(b).iter().find(|&u| {
            u_tilde
                .intersection(b)
                .iter()
                .all(|bv| edges.iter().any(|e| e.contains(bv) && !e.contains(u)))
        }) {
            u_tilde.remove(u);
            edges.retain(|e| !e.contains(u));
        }
        if u_tilde.difference(b).is_empty() {
            break;
        }
        // Step 2
        let pick = u_tilde.difference(b).iter().find(|&u| {
            u_tilde.intersection(b).iter().any(|bv| {
                let mut through = edges.iter().filter(|e| e.contains(bv)).peekable();
                through.peek().is_some() && through.all(|e| e.contains(u))
            })
        });
        let Some(u) = pick else {
            return Err(Error::WitnessCheckFailed(format!(
                "no Step 2 vertex with W = {w:?} and Ũ = {:?}",
                u_tilde.to_vec()
            )));
        };
        w.push(u);
        edges = link_edges(&edges, u);
        u_tilde.remove(u);
        let covered = edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
        u_tilde = u_tilde.intersection(covered);
        if u_tilde.difference(b).is_empty() {
            break;
        }
    }

    let u_prime = w.iter().copied().fold(b_prime, |acc, x| acc.with(x));
    if u_prime.intersection(b) != b_prime {
        return Err(Error::WitnessCheckFailed("U′ ∩ B differs from B′".into()));
    }
    let degree = u_prime.len() as i64 - b_prime.len() as i64 - 1;
    let profile = reduced_betti_induced(g.edges(), u_prime, FieldSpec::Rationals, DEFAULT_FACE_CAP)?;
    let beta = profile.dim(degree);
    if beta == 0 {
        return Err(Error::WitnessCheckFailed(format!(
            "reduced homology of Γ[{:?}] vanishes in degree {degree}",
            u_prime.to_vec()
        )));
    }
    Ok(WitnessSubset {
        u_prime: u_prime.to_vec(),
        b_prime: b_prime.to_vec(),
        w,
        homology_degree: degree,
        reduced_betti: beta,
    })
}
