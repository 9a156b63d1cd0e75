//! Betti numbers of squarefree monomial ideals and the combinatorics of their
//! hypergraphs: Hochster and Taylor engines, tree/forest lower bounds, upper
//! bounds on `β_{2,3d-1}`, and isomorph-free searches over pure hypergraphs.

pub mod atlas;
pub mod betti;
pub mod cli;
pub mod document;
pub mod bounds;
pub mod error;
pub mod homology;
pub mod hypercomb;
pub mod report;

pub use betti::{BettiKind, BettiTable, EngineConfig};
pub use error::{Error, Result};
pub use homology::{FieldSpec, HomologyProfile};
pub use hypercomb::{Coloring, Hypergraph, SimplicialComplexView, TreeOrdering, VertexSet};
pub use report::{Comparison, Relation, Report, Verdict};
