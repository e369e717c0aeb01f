//! Finite semigroups and the two-sided Karnofsky–Rhodes expansion.
//!
//! The crate works with semigroups given by multiplication tables. On top of
//! the basic algebra (Green's relations, ω-powers, quotients, Rees matrix
//! semigroups, identities) it builds
//!
//! * the two-sided Cayley graph of a generating map and its transition edges
//!   ([`cayley`]),
//! * the expansion `S_φ^KR`, its projection, induced maps and iterated towers
//!   ([`kr`]),
//! * decision procedures for KR-covers, equidivisibility and letter
//!   super-cancellativity ([`analysis`]),
//! * truncated free products with normal forms ([`freeprod`]).
//!
//! Semigroups are exchanged as JSON ([`json`]); the `sgrp` binary wraps the
//! library ([`cli`]).

pub mod alphabet;
pub mod analysis;
pub mod budget;
pub mod catalog;
pub mod cayley;
pub mod cli;
pub mod freeprod;
pub mod graph;
pub mod green;
pub mod hom;
pub mod identity;
pub mod json;
pub mod kr;
pub mod semigroup;

pub use alphabet::{GeneratingMap, Letter, Word};
pub use budget::Budget;
pub use cayley::TwoSidedCayleyGraph;
pub use green::GreenData;
pub use hom::{hom_from_generator_images, Homomorphism};
pub use identity::{satisfies_identity, Identity};
pub use kr::{induced_hom, kr_expand, kr_tower, oracle_classes, KrExpansion, KrTower};
pub use semigroup::{Element, FiniteSemigroup};
