//! fixitylab: fixed-point analysis of finite permutation groups.
//!
//! The crate provides exact permutation arithmetic, deterministic stabilizer
//! chains, fixity profiles of group actions, classifiers for transitive
//! soluble actions of fixity 2 and 3, and a census harness that sweeps
//! exhaustive lists of transitive groups of small degree.

mod chain;

pub mod census;
pub mod classify;
pub mod cli;
pub mod datagen;
pub mod enumerate;
pub mod fixity;
pub mod group;
pub mod io;
pub mod lemmas;
pub mod perm;
pub mod quotient;
pub mod structure;

pub use group::{Group, GroupError, Subgroup, ENUMERATION_BOUND};
pub use perm::{Perm, PermError, Point};
