//! Permutation-group machinery and the sporadic graph catalog.

pub mod catalog;
pub mod perm;

pub use catalog::{catalog, srg_check, CATALOG_NAMES, CATALOG_PARAMETERS};
pub use perm::{cayley_graph, CosetAction, PermGroup, Permutation, Suborbit};
