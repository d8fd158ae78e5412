//! Graphs attached to irreducible ideals of numerical semigroups.
//!
//! For a numerical semigroup `Λ` and `x ∈ Λ`, the irreducible ideal
//! `Λ \ B(x)` yields a graph on `B*(x)` joining `y` and `z` when
//! `x - (y + z) ∉ Λ`. This crate builds those graphs, classifies the order 6
//! and order 7 cases by factorization structure and degree sequence, decides
//! planarity with Kuratowski certificates, and sweeps whole families of
//! semigroups checking each classification claim against brute-force oracles.

pub mod analysis;
pub mod classifier;
pub mod error;
pub mod export;
pub mod graph;
pub mod ideal;
pub mod semigroup;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{degree_sequence, IdealGraph};
pub use ideal::{
    build_graph, build_graph_general, divisors, irreducible_ideal_contains, is_irreducible,
    make_ideal, DivisorSet, GeneratedIdeal,
};
pub use semigroup::{lemma1_lower_bound, Factorization, FactorizationProfile, NumericalSemigroup};
