//! Exhaustive generation, verification and bound search for
//! edge-girth-regular graphs.
//!
//! An egr(v, k, g, lambda) graph is a connected k-regular graph of order v
//! and girth g in which every edge lies on exactly lambda girth cycles.
//! This crate provides:
//!
//! - [`graph`]: bitset-backed simple graphs, graph6 serialization, LCF
//!   construction;
//! - [`girth`]: girth, shortest-path counting, and the linear-time
//!   girth-cycle counter with its brute-force oracle;
//! - [`canon`]: canonical forms for isomorph rejection and the visited
//!   store of the search;
//! - [`check`]: Moore and edge-girth-regular order bounds, feasibility
//!   arithmetic, and full verification;
//! - [`seed`]: Moore-tree seeds;
//! - [`generate`]: the exhaustive branch-and-prune generator and its
//!   variants;
//! - [`sweep`]: the order sweep computing n(k, g, lambda);
//! - [`fixtures`]: named graphs for tests and demos.

pub mod canon;
pub mod check;
pub mod fixtures;
pub mod generate;
pub mod girth;
pub mod graph;
pub mod seed;
pub mod sweep;

pub use canon::{canonical_key, CanonicalKey, VisitedStore};
pub use check::{
    egr_lower_bound, feasible_order, is_egr, lambda_profile, moore_bound, verify_egr,
    LambdaProfile, ParamTuple,
};
pub use generate::{generate_all, generate_to_vec, GenerationConfig, SearchStats};
pub use girth::{brute_force_ngc, distance_and_nsp, girth, ngc};
pub use graph::{parse_graph6, write_graph6, Edge, Graph, MAX_ORDER};
pub use seed::{build_seed_tree, SeedTree};
pub use sweep::{sweep, SweepOutcome};
