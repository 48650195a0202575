//! Finite permutation groups: prime-index subgroup chains, supersolvability
//! and its weak variants, ordered Sylow towers, and a verification corpus.

pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod series;
pub mod subgroup;

pub use bitset::MemberSet;
pub use error::{GroupError, Result};
pub use group::{Caps, ElementTable, FiniteGroup};
pub use lattice::{Cover, Lattice, LatticeStats};
pub use perm::Permutation;
pub use series::ChiefSeries;
pub use subgroup::{CosetAction, Subgroup};
