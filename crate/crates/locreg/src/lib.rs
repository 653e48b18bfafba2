//! Construction, verification, classification, and exhaustive search of
//! (k,t)-regular graphs: k-regular graphs in which every vertex
//! neighbourhood induces a t-regular subgraph.
//!
//! - [`graph`]: the core graph type, certification, distances,
//!   far-connectedness; [`graph6`] for the interchange format.
//! - [`products`]: Cartesian, lexicographic-blowup, and tensor products
//!   with their parameter laws.
//! - [`structure`]: triangle neighbourhood profiles, twin vertices, the
//!   two-path bound, and the complete-multipartite classification in the
//!   diagonal regime.
//! - [`existence`]: obstructions, constructive recipes, the
//!   exists/not-exists/unknown trichotomy, and the small-parameter table.
//! - [`groups`]: permutation groups, coset actions, orbital and Cayley
//!   graphs, and the catalog of seven sporadic constructions.
//! - [`search`]: isomorph-free exhaustive generation up to a vertex bound.
//! - [`verify`]: quantified property suites over all of the above.

pub mod bitset;
pub mod error;
pub mod existence;
pub mod graph;
pub mod graph6;
pub mod groups;
pub mod products;
pub mod random;
pub mod search;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, KtParameters, RegularityReport};
