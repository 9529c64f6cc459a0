//! Exact distinguishing numbers, chromatic numbers and their list
//! analogues for small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`family`], [`format`], [`automorphism`]: graphs, named
//!   families, graph6/edge-list I/O and explicit automorphism groups;
//! * [`labeling`]: the distinguishing / proper / proper-distinguishing
//!   predicates, minimum label counts and exhaustive enumeration;
//! * [`counting`]: exact sizes of unions of related list-sequence sets;
//! * [`lists`]: list numbers by definition, by characterization, and the
//!   constructive labelings for friendship and book graphs;
//! * [`small_graphs`]: all graphs of a given small order up to
//!   isomorphism.

pub mod automorphism;
pub mod counting;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod labeling;
pub mod labelset;
pub mod lists;
pub mod small_graphs;

pub use automorphism::{automorphisms, AutomorphismGroup, DEFAULT_GROUP_CAP};
pub use counting::{Count, FunctionFamily, OverlapProfile, RelatedSequence};
pub use error::{Error, Result};
pub use family::{generate_family, Family};
pub use format::{encode_edge_list, encode_graph6, parse_edge_list, parse_graph6};
pub use graph::{Graph, Permutation};
pub use labeling::{enumerate_labelings, min_labels, satisfies, Labeling, LabelingSet, Predicate};
pub use labelset::LabelSet;
pub use lists::ListAssignment;
