//! Deciding which small graphs are zero-divisor graphs of commutative
//! semigroups with zero.
//!
//! A graph `G` is a zero-divisor graph when some commutative semigroup on
//! `{0} ∪ V(G)` has `xy = 0` exactly for adjacent `x != y`. This crate holds
//! the pure algorithmic pieces: bitset graphs and canonical labeling
//! ([`graph`], [`canon`], [`graph6`]), necessary conditions
//! ([`conditions`]), multiplication tables and the exhaustive realization
//! search ([`semigroup`]), constructive recognizers for known families
//! ([`patterns`]), and isomorphism-class enumeration with per-graph
//! classification ([`enumeration`]).
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod conditions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod semigroup;

pub use canon::{canonical_form, CanonicalCode};
pub use conditions::ConditionReport;
pub use enumeration::{classify, Category, Classification, ClassifyOptions, Method};
pub use error::{Graph6Error, GraphError, TableError};
pub use graph::{Distance, Graph, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6};
pub use semigroup::{find_realization, verify_witness, Budget, Element, MulTable, WitnessCertificate};
