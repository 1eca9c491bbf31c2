//! Almost special and 2-special representations of Weyl groups.
//!
//! - [`symbols`]: type D symbols, their equivalence classes and the
//!   bipartition bridge.
//! - [`dn_classification`]: Irr(W(D_n)) as labels and the almost special /
//!   2-special predicates.
//! - [`sign_twist`]: tensoring with sign via complements of symbol rows.
//! - [`exceptional_tables`]: embedded E6/E7/E8 tables of almost special
//!   representations and the sign-twist facts read off them.
//! - [`perm_groups`]: subgroups of S3, S4, S5, quotients and identification.
//! - [`strata_map`]: the strata of the E8, F4 and G2 families with their
//!   groups `H'/H`.
//! - [`verify`]: exhaustive sweeps; [`cli`]: the command-line front end.

pub mod cli;
pub mod dn_classification;
pub mod exceptional_tables;
pub mod partitions;
pub mod perm_groups;
pub mod sign_twist;
pub mod strata_map;
pub mod symbols;
pub mod verify;

pub use dn_classification::{IrrLabelD, Marker};
pub use exceptional_tables::{ExcTable, GroupType, RepLabel};
pub use perm_groups::{GroupKind, PermGroup, Permutation};
pub use strata_map::{StrataTable, StratumEntry};
pub use symbols::{Bipartition, Symbol, SymbolClass};
