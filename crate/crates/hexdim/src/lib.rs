//! Resolvability parameters of hollow coronoid and starphene graphs.
//!
//! The crate generates the two parameterized chemical graph families HC(a,b,c)
//! and SP(a,b,c), computes their vertex metric, edge metric, mixed metric and
//! multiset dimensions by certified exhaustive search, and audits a set of
//! closed-form distance-code families and reference code tables against a
//! breadth-first-search distance oracle.
//!
//! ```
//! use hexdim::generators::{build_hc, HcParams};
//! use hexdim::resolve::{min_dimension, SearchOptions, Variant};
//!
//! let g = build_hc(HcParams { a: 4, b: 4, c: 4 }).unwrap();
//! let result = min_dimension(&g, Variant::MixedMetric, &SearchOptions::default()).unwrap();
//! assert_eq!(result.value, Some(3));
//! assert!(result.certified);
//! ```

pub mod audit;
pub mod generators;
pub mod graph;
pub mod resolve;
pub mod subsets;

pub use graph::{
    all_pairs_distances, distance_vertex_edge, DistanceMatrix, Edge, Family, GraphError,
    LabeledGraph, VertexId, VertexLabel,
};
pub use resolve::{
    code, is_independent, is_resolving, min_dimension, multiset_rep, DimensionResult, Element,
    SearchError, SearchOptions, Variant,
};
