//! Exact graded Betti numbers of path ideals of cycles and lines.
//!
//! Two independent routes are provided and are expected to agree:
//!
//! * [`betti::betti_hochster`] runs Hochster's formula by brute force, summing
//!   reduced homology of complement complexes over every induced
//!   subcollection, with ranks computed exactly by [`homology`].
//! * [`betti::betti_closed_cycle`] and [`betti::betti_closed_line`] use the
//!   run-sequence theory: top-degree formulas plus a count of eligible
//!   subcollections enumerated by [`path_complex`].
//!
//! Vertices are 1-based integers in `1..=64`; faces are bit sets.

pub mod betti;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod path_complex;
pub mod simplicial;
pub mod verify;

pub use betti::{
    betti_closed_cycle, betti_closed_line, betti_hochster, betti_hochster_with_cap,
    betti_top_degree, count_eligible, homology_cycle_complement, homology_run_sequence,
    nonzero_criterion, pd_reg, BettiEntry, BettiTable, HomologySummary, Method,
    DEFAULT_MAX_SUBSET_BITS,
};
pub use error::{Error, Result};
pub use homology::{
    boundary_matrices, matrix_rank, reduced_homology_dims, BoundaryMatrix, FieldSpec,
    HomologyVector,
};
pub use path_complex::{
    build_path_complex, build_run_complement, enumerate_placements, run_decomposition,
    vertex_count_of_runs, PathFamilySpec, PathKind, RunAggregates, RunPlacement, RunSequence,
};
pub use simplicial::{Face, SimplicialComplex, Vertex, VertexSet, MAX_VERTEX};
