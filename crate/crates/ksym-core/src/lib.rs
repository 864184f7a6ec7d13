//! Exact-arithmetic toolkit for k-symmetric graphs: graphs whose induced
//! k-vertex subgraph densities equal their expected values in the uniform
//! random graph.
//!
//! The crate provides:
//!
//! - bitset-backed graphs with adjacency-matrix and graph6 serialization
//!   ([`graph`], [`graph6`]);
//! - canonical labeling, isomorphism, and automorphism counting for small
//!   orders ([`canon`]);
//! - exact induced-subgraph density profiles and expected densities
//!   ([`mod@density`]), with symmetry predicates and reports ([`symmetry`]);
//! - the 2-adic admissibility theory of orders that can carry k-symmetric
//!   graphs ([`admissibility`]);
//! - the inflation (lexicographic product) constructor together with its
//!   closed-form density predictions ([`inflation`]);
//! - randomized sampling, exhaustive small-order enumeration, and clique and
//!   degree statistics ([`search`], [`enumerate`], [`clique`]).
//!
//! All densities are exact rationals; floating point never enters a
//! correctness decision.
//!
//! # Example
//!
//! ```
//! use ksym_core::{symmetry_report, Graph};
//! use num_traits::Zero;
//!
//! // the 8-vertex wheel realizes every expected 3-vertex density exactly:
//! // 1/8 triangles, 3/8 paths, 3/8 single edges, 1/8 empty triples
//! let wheel = Graph::wheel(8);
//! let report = symmetry_report(&wheel, 3).unwrap();
//! assert!(report.is_symmetric);
//! assert!(report.entries.iter().all(|e| e.deviation.is_zero()));
//!
//! // orders up to 16 that pass the divisibility constraint for 3-symmetry
//! let feasible: Vec<u64> = ksym_core::admissible_orders(3, 16)
//!     .unwrap()
//!     .iter()
//!     .map(|e| e.n)
//!     .collect();
//! assert_eq!(feasible, vec![1, 2, 8, 10, 16]);
//! ```

#![warn(
    missing_debug_implementations,
    trivial_numeric_casts,
    unused_import_braces,
    unused_qualifications
)]

pub mod admissibility;
pub mod canon;
pub mod clique;
pub mod density;
pub mod enumerate;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod inflation;
pub mod rational;
pub mod search;
pub mod symmetry;

pub use admissibility::{
    admissible_orders, is_k_admissible, joint_admissible_orders, nu2, nu2_binomial,
    smallest_admissible, AdmissibilityError, AdmissibilityRecord, OrderEntry,
};
pub use canon::{
    automorphism_count, canonical_code, canonical_form, is_isomorphic, CanonError, CanonicalCode,
};
pub use clique::max_clique;
pub use density::{
    class_table, density, expected_density, profile2, profile3, DensityError, Profile2, Profile3,
};
pub use enumerate::{
    enumerate_small_orders, enumerate_unlabeled, EnumerateError, EnumerationResult,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use inflation::{
    inflate, predict_3density_2sym, predict_3profile, predict_edge_density, triangle_excess,
    InflationError, InflationPrediction,
};
pub use rational::Rational;
pub use search::{
    batch_stats, estimate_from_rate, run_search, sample_2symmetric, SampleConfig, SearchError,
    SearchOutcome, StatsReport,
};
pub use symmetry::{
    is_almost_3_symmetric, is_k_symmetric, is_self_complementary, symmetry_report, SymmetryEntry,
    SymmetryError, SymmetryReport,
};

/// Version tag carried by every JSON document this crate emits.
pub const JSON_SCHEMA_VERSION: u32 = 1;
