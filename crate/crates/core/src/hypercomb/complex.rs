use super::VertexSet;
use crate::error::{Error, Result};

/// A simplicial complex given by its vertex set and minimal nonfaces.
///
/// A set `F` of vertices is a face iff no minimal nonface is contained in it,
/// so the empty set is always a face. Faces are enumerated on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexView {
    vertices: VertexSet,
    minimal_nonfaces: Vec<VertexSet>,
}

impl SimplicialComplexView {
    /// Nonfaces not contained in `vertices` are discarded.
    pub fn new(vertices: VertexSet, minimal_nonfaces: Vec<VertexSet>) -> Self {
        let minimal_nonfaces = minimal_nonfaces
            .into_iter()
            .filter(|f| f.is_subset(vertices))
            .collect();
        SimplicialComplexView {
            vertices,
            minimal_nonfaces,
        }
    }

    /// The complex `{∅}` on no vertices.
    pub fn empty_face_only() -> Self {
        SimplicialComplexView {
            vertices: VertexSet::EMPTY,
            minimal_nonfaces: Vec::new(),
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: VertexSet) -> Self {
        SimplicialComplexView {
            vertices,
            minimal_nonfaces: Vec::new(),
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn minimal_nonfaces(&self) -> &[VertexSet] {
        &self.minimal_nonfaces
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        f.is_subset(self.vertices) && !self.minimal_nonfaces.iter().any(|n| n.is_subset(f))
    }

    /// Induced subcomplex `Γ[W]` (with `W` intersected with the vertex set).
    pub fn restrict(&self, w: VertexSet) -> Self {
        let w = w.intersection(self.vertices);
        SimplicialComplexView {
            vertices: w,
            minimal_nonfaces: self
                .minimal_nonfaces
                .iter()
                .copied()
                .filter(|f| f.is_subset(w))
                .collect(),
        }
    }

    /// All faces grouped by cardinality: `result[k]` holds the faces with `k`
    /// vertices, each list sorted by bitmask. `result[0] == [∅]`.
    pub fn faces_by_size(&self, cap: usize) -> Result<Vec<Vec<VertexSet>>> {
        let verts = self.vertices.to_vec();
        let mut levels: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY]];
        let mut total = 1usize;
        // nonfaces indexed by their largest vertex: adding v only needs those
        let mut by_max: Vec<Vec<VertexSet>> = vec![Vec::new(); verts.len()];
        for &nf in &self.minimal_nonfaces {
            let top = nf.max().expect("nonfaces are nonempty");
            let idx = verts.iter().position(|&v| v == top).expect("nonface inside vertex set");
            by_max[idx].push(nf);
        }
        // frontier entries: (face, index of its largest vertex + 1)
        let mut frontier: Vec<(VertexSet, usize)> = vec![(VertexSet::EMPTY, 0)];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &(face, start) in &frontier {
                for (i, &v) in verts.iter().enumerate().skip(start) {
                    let cand = face.with(v);
                    if by_max[i].iter().any(|nf| nf.is_subset(cand)) {
                        continue;
                    }
                    next.push((cand, i + 1));
                }
            }
            if next.is_empty() {
                break;
            }
            total += next.len();
            if total > cap {
                return Err(Error::TooManyFaces { cap });
            }
            let mut level: Vec<VertexSet> = next.iter().map(|&(f, _)| f).collect();
            level.sort_by_key(|f| f.bits());
            levels.push(level);
            frontier = next;
        }
        Ok(levels)
    }

    /// f-vector including the empty face: `f[k]` = number of faces with `k` vertices.
    pub fn f_vector(&self, cap: usize) -> Result<Vec<usize>> {
        Ok(self.faces_by_size(cap)?.iter().map(Vec::len).collect())
    }
}
