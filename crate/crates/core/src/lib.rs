//! Exact chromatic vertex stability for small graphs.
//!
//! The crate computes χ, `vs_χ` and `ivs_χ` with all minimum witnesses,
//! builds the graph families with `Δ = 4`, `χ = 3`, `ivs_χ = 3`, `vs_χ = 2`,
//! enumerates small graphs up to isomorphism by canonical augmentation, and
//! runs named verifiers that check each structural claim exhaustively or on
//! seeded random instances.

pub mod canon;
pub mod chromatic;
pub mod error;
pub mod families;
pub mod generator;
pub mod graph;
pub mod io;
pub mod planarity;
pub mod verify;

pub use canon::{
    are_isomorphic, automorphisms, canonical_form, canonical_labeling, AutInfo, CanonKey, Canonical,
};
pub use chromatic::{
    analyze, c_chi, chromatic_number, is_k_colorable, ivs_chi, ivs_chi_via_colorings, vs_chi,
    Coloring, Stability, StabilityReport,
};
pub use error::{Error, Result};
pub use families::FamilyParams;
pub use generator::{enumerate, Catalog, Filter, GenSpec};
pub use graph::{Bipartition, Connectivity, DegreeProfile, Graph, VertexSet, MAX_ORDER};
pub use io::{parse_graph6, to_dot, to_graph6};
pub use planarity::is_planar;
pub use verify::{verify, Claim, Scope, Verdict, VerificationReport};
