//! Reduced simplicial homology of Stanley–Reisner complexes over an exact field.
//!
//! [`reduced_betti_all`] builds the augmented chain complex by explicit face
//! enumeration and computes boundary ranks exactly. [`reduced_betti`] first
//! shrinks the complex with exact vertex reductions (cones, and the two
//! Mayer–Vietoris splittings along a vertex whose link or antistar is a cone)
//! and only falls back to linear algebra on what is left.

pub mod linalg;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercomb::{link_edges, SimplicialComplexView, VertexSet};
use linalg::{rank_mod_p, rank_rational, SparseRow};

/// Default cap on the number of enumerated faces.
pub const DEFAULT_FACE_CAP: usize = 1 << 22;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum FieldSpec {
    #[default]
    Rationals,
    /// `GF(p)`, `p` a prime below `2^31`.
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p < 1 << 31 {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    fn rank(self, rows: &[SparseRow]) -> usize {
        match self {
            FieldSpec::Rationals => rank_rational(rows),
            FieldSpec::PrimeField(p) => rank_mod_p(rows, p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` (or `Q`, `rationals`) and `gf:P`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "q" | "Q" | "rationals" | "QQ") {
            return Ok(FieldSpec::Rationals);
        }
        let rest = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("GF:"))
            .ok_or_else(|| Error::BadParams(format!("unknown field `{s}`; use q or gf:P")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::BadParams(format!("bad characteristic `{rest}`")))?;
        FieldSpec::prime(p)
    }
}

/// Reduced Betti numbers `β̃_p` for `p >= -1`; entries beyond the stored range are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// `dims[k]` is `β̃_{k-1}`.
    dims: Vec<u64>,
}

impl HomologyProfile {
    pub fn zero() -> Self {
        HomologyProfile { dims: Vec::new() }
    }

    /// Profile of `{∅}`: `β̃_{-1} = 1`.
    pub fn empty_face_only() -> Self {
        HomologyProfile { dims: vec![1] }
    }

    fn from_dims(mut dims: Vec<u64>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyProfile { dims }
    }

    /// `β̃_p`; zero for `p < -1`.
    pub fn dim(&self, p: i64) -> u64 {
        if p < -1 {
            return 0;
        }
        self.dims.get((p + 1) as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(p, β̃_p)` pairs in increasing `p`.
    pub fn nonzero(&self) -> Vec<(i64, u64)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != 0)
            .map(|(k, &d)| (k as i64 - 1, d))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ_p (-1)^p β̃_p`.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// `H̃_p(result) = H̃_{p-1}(self)`.
    fn suspended(mut self) -> Self {
        if !self.dims.is_empty() {
            self.dims.insert(0, 0);
        }
        self
    }
}

/// A cone apex: a vertex in no minimal nonface, so every facet contains it.
pub fn is_cone(k: &SimplicialComplexView) -> Option<usize> {
    cone_apex(k.vertices(), k.minimal_nonfaces())
}

fn cone_apex(w: VertexSet, nonfaces: &[VertexSet]) -> Option<usize> {
    let covered = nonfaces
        .iter()
        .filter(|e| e.is_subset(w))
        .fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
    w.difference(covered).min()
}

/// Reduced Euler characteristic `Σ_{p >= -1} (-1)^p f_p` with `f_{-1} = 1`.
pub fn reduced_euler(k: &SimplicialComplexView, face_cap: usize) -> Result<i64> {
    let f = k.f_vector(face_cap)?;
    Ok(f.iter()
        .enumerate()
        .map(|(size, &c)| if size % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum())
}

/// Reduced homology by explicit boundary-matrix ranks over `field`.
pub fn reduced_betti_all(
    k: &SimplicialComplexView,
    field: FieldSpec,
    face_cap: usize,
) -> Result<HomologyProfile> {
    let levels = k.faces_by_size(face_cap)?;
    // rank[s] = rank of the boundary map from faces of size s to size s-1
    let mut rank = vec![0usize; levels.len() + 1];
    for s in 1..levels.len() {
        let lower = &levels[s - 1];
        let rows: Vec<SparseRow> = levels[s]
            .iter()
            .map(|&face| {
                let mut row: SparseRow = face
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let col = lower
                            .binary_search_by_key(&face.without(v).bits(), |f| f.bits())
                            .expect("boundary face present") as u32;
                        (col, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect();
        rank[s] = if s == 1 {
            usize::from(!rows.is_empty())
        } else {
            field.rank(&rows)
        };
    }
    let dims: Vec<u64> = (0..levels.len())
        .map(|s| (levels[s].len() - rank[s] - rank[s + 1]) as u64)
        .collect();
    let profile = HomologyProfile::from_dims(dims);
    debug_assert_eq!(
        profile.euler(),
        levels
            .iter()
            .enumerate()
            .map(|(s, l)| if s % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
            .sum::<i64>(),
        "Euler–Poincaré"
    );
    Ok(profile)
}

/// Reduced homology of `k`, using exact vertex reductions before linear algebra.
///
/// With `v` a vertex with `{v}` a face, `K = (K - v) ∪ star(v)` glued along
/// `lk(v)`. The star is a cone, so a cone link gives `H̃(K) = H̃(K - v)`, and a
/// cone antistar gives `H̃_p(K) = H̃_{p-1}(lk(v))`.
pub fn reduced_betti(
    k: &SimplicialComplexView,
    field: FieldSpec,
    face_cap: usize,
) -> Result<HomologyProfile> {
    reduce(k.vertices(), k.minimal_nonfaces().to_vec(), field, face_cap)
}

/// Same as [`reduced_betti`] on the induced subcomplex `Γ[w]` of the complex
/// with minimal nonfaces `nonfaces`.
pub fn reduced_betti_induced(
    nonfaces: &[VertexSet],
    w: VertexSet,
    field: FieldSpec,
    face_cap: usize,
) -> Result<HomologyProfile> {
    let edges = nonfaces.iter().copied().filter(|e| e.is_subset(w)).collect();
    reduce(w, edges, field, face_cap)
}

fn reduce(
    mut w: VertexSet,
    mut edges: Vec<VertexSet>,
    field: FieldSpec,
    face_cap: usize,
) -> Result<HomologyProfile> {
    'outer: loop {
        // a singleton nonface {v} just removes v from the vertex set
        let singles = edges
            .iter()
            .filter(|e| e.len() == 1)
            .fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
        if !singles.is_empty() {
            w = w.difference(singles);
            edges.retain(|e| e.len() > 1);
        }
        if w.is_empty() {
            return Ok(HomologyProfile::empty_face_only());
        }
        if cone_apex(w, &edges).is_some() {
            return Ok(HomologyProfile::zero());
        }
        for v in w {
            let rest = w.without(v);
            let link = link_edges(&edges, v);
            if cone_apex(rest, &link).is_some() {
                edges.retain(|e| !e.contains(v));
                w = rest;
                continue 'outer;
            }
            let antistar: Vec<VertexSet> =
                edges.iter().copied().filter(|e| !e.contains(v)).collect();
            if cone_apex(rest, &antistar).is_some() {
                return Ok(reduce(rest, link, field, face_cap)?.suspended());
            }
        }
        return reduced_betti_all(&SimplicialComplexView::new(w, edges), field, face_cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn both(k: &SimplicialComplexView) -> HomologyProfile {
        let a = reduced_betti_all(k, FieldSpec::Rationals, DEFAULT_FACE_CAP).unwrap();
        let b = reduced_betti(k, FieldSpec::Rationals, DEFAULT_FACE_CAP).unwrap();
        assert_eq!(a, b);
        a
    }

    #[test]
    fn empty_face_only() {
        let k = SimplicialComplexView::empty_face_only();
        assert_eq!(both(&k).nonzero(), vec![(-1, 1)]);
        assert_eq!(reduced_euler(&k, 10).unwrap(), -1);
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplexView::new(set(&[1, 2]), vec![set(&[1, 2])]);
        assert_eq!(both(&k).nonzero(), vec![(0, 1)]);
    }

    #[test]
    fn hollow_triangle() {
        let k = SimplicialComplexView::new(set(&[1, 2, 3]), vec![set(&[1, 2, 3])]);
        assert_eq!(both(&k).nonzero(), vec![(1, 1)]);
        assert_eq!(reduced_euler(&k, 10).unwrap(), -1);
        assert_eq!(is_cone(&k), None);
    }

    #[test]
    fn cones() {
        let simplex = SimplicialComplexView::simplex(set(&[1, 2, 3]));
        assert_eq!(is_cone(&simplex), Some(1));
        assert!(both(&simplex).is_acyclic());
        let edge = SimplicialComplexView::simplex(set(&[1, 2]));
        assert_eq!(reduced_euler(&edge, 10).unwrap(), 0);
        let path = SimplicialComplexView::new(set(&[1, 2, 3]), vec![set(&[1, 2]), set(&[2, 3])]);
        assert!(is_cone(&path.restrict(set(&[1, 3]))).is_some());
    }

    #[test]
    fn singleton_nonfaces_are_not_faces() {
        // {1} is a nonface; remaining complex is two points {2},{3}
        let k = SimplicialComplexView::new(set(&[1, 2, 3]), vec![set(&[1]), set(&[2, 3])]);
        assert_eq!(both(&k).nonzero(), vec![(0, 1)]);
    }

    #[test]
    fn real_projective_plane_depends_on_characteristic() {
        // 6-vertex RP^2: minimal nonfaces of the standard triangulation
        let facets: [[usize; 3]; 10] = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ];
        let fs: Vec<VertexSet> = facets.iter().map(|f| set(f)).collect();
        let mut nonfaces = Vec::new();
        for b in 1u64..64 {
            let s = VertexSet::from_bits(b);
            let face = fs.iter().any(|f| s.is_subset(*f));
            let minimal = s.iter().all(|v| fs.iter().any(|f| s.without(v).is_subset(*f)));
            if !face && minimal {
                nonfaces.push(s);
            }
        }
        let k = SimplicialComplexView::new(VertexSet::full(6), nonfaces);
        assert!(both(&k).is_acyclic());
        let gf2 = reduced_betti_all(&k, FieldSpec::PrimeField(2), DEFAULT_FACE_CAP).unwrap();
        assert_eq!(gf2.nonzero(), vec![(1, 1), (2, 1)]);
        let fast2 = reduced_betti(&k, FieldSpec::PrimeField(2), DEFAULT_FACE_CAP).unwrap();
        assert_eq!(gf2, fast2);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:2".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(2));
        assert_eq!("gf:4".parse::<FieldSpec>(), Err(Error::NotPrime(4)));
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(7).to_string(), "gf:7");
    }

    #[test]
    fn face_cap_propagates() {
        let k = SimplicialComplexView::new(VertexSet::full(12), vec![set(&[1, 2])]);
        assert_eq!(
            reduced_betti_all(&k, FieldSpec::Rationals, 100),
            Err(Error::TooManyFaces { cap: 100 })
        );
    }
}
