//! Finite group computation built around dense multiplication tables.
//!
//! The crate computes Fitting subgroups and soluble radicals of finite groups
//! two independent ways — elementwise through normal-closure series, and
//! through first-order membership formulas evaluated by a bounded-quantifier
//! model checker — so that the two routes can be cross-checked against each
//! other on real groups.
//!
//! Modules:
//! - [`group`]: group construction, element arithmetic, subgroups, closures.
//! - [`words`]: commutator words (lower-central, derived, Engel) and their
//!   evaluation.
//! - [`series`]: commutator subgroups and central/derived series, each
//!   computed by two routes that must agree.
//! - [`radicals`]: Fitting subgroup, soluble radical, brute-force oracles,
//!   Engel classification, and normal-closure class bounds.
//! - [`logic`]: first-order formulas over the group language, a parser and
//!   renderer for a small concrete grammar, and a quantifier evaluator with
//!   conjugator pruning.

pub mod group;
pub mod logic;
pub mod radicals;
pub mod series;
pub mod words;

pub use group::{FiniteGroup, GroupError, PermutationSpec, Subgroup};
pub use series::{SeriesError, SeriesKind, SeriesReport};
pub use words::{Word, WordError};
