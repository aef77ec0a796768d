//! Exact Gromov-Hausdorff distances and Borsuk numbers of finite metric spaces.
//!
//! The crate is `no_std` with `alloc`. Enabling the `std` feature lets the
//! branch-and-bound search in [`solver`] spread its top-level branches over
//! several threads; results are identical with or without it.
//!
//! ```
//! use ghborsuk_core::{delta_simplex, gh_exact, borsuk_number, SolverOptions, ToleranceConfig};
//!
//! let x = delta_simplex(2, 1.0).unwrap();
//! let y = delta_simplex(3, 1.0).unwrap();
//! assert_eq!(borsuk_number(&y, &ToleranceConfig::default()).unwrap().number, 3);
//! // Two points against a three-point single-distance space of the same width.
//! assert_eq!(gh_exact(&x, &y, &SolverOptions::search_only()).unwrap().value, 0.5);
//! ```
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod borsuk;
pub mod correspondence;
pub mod generators;
pub mod metric;
pub mod solver;

pub use borsuk::{
    borsuk_number, can_partition_smaller, diameter_graph, generalized_borsuk_via_gh, is_dls_n, BorsukError,
    BorsukResult, ConsistencyReport, DiameterGraph,
};
pub use correspondence::{
    block_distortion, decompose_blocks, distortion, enumerate_irreducible, is_correspondence, is_irreducible,
    reduce_to_irreducible, BlockDecomposition, Correspondence, CorrespondenceError, Relation,
};
pub use generators::{generate, GenError, GenKind, GenSpec};
pub use metric::{
    block_distances, delta_simplex, diameter, hausdorff_distance, hausdorff_distance_by_balls, partition_diameter,
    scale, validate_metric, FiniteMetricSpace, MetricError, PartitionError, PartitionOf, ToleranceConfig,
};
pub use solver::{gh_bounds, gh_exact, gh_scaled, gh_shortcut, GhResult, Method, SolverError, SolverOptions};
