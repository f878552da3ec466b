//! Exact graph invariants, extremal families, theorem checking, and automated
//! conjecture generation for small graphs.
//!
//! The crate revolves around five capabilities:
//!
//! - [`graph`]: simple graphs on up to 64 vertices as bitset adjacency rows,
//!   with the structural predicates (regularity, claw-freeness, and friends)
//!   everything else conditions on.
//! - [`invariants`]: exact solvers for independence, matching, and domination
//!   style invariants, each paired with an independent brute-force oracle in
//!   [`bruteforce`] and returning canonical witnesses.
//! - [`families`]: constructors and certifiers for the extremal graph families
//!   where the registered bounds hold with equality.
//! - [`theorems`]: a registry of known bounds relating the invariants, checked
//!   exactly with rational arithmetic over single graphs or whole corpora.
//! - [`conjecture`]: a generator that proposes inequalities of the form
//!   `target <= slope * other + intercept` from corpus data, ranks them, and
//!   filters them for significance.
//!
//! Graphs enter and leave the crate in graph6 format ([`graph6`]), and corpora
//! are plain files with one graph6 string per line ([`corpus`]).
//!
//! The `examples/` directory is the front door: each example is a small,
//! runnable tour of one capability. The `conjgraph` binary wraps the same
//! library surface for shell use.

pub mod bruteforce;
pub mod cli;
pub mod conjecture;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod theorems;

/// Exact arithmetic for theorem sides and conjecture coefficients.
pub type Rational = num_rational::Ratio<i64>;

pub use conjecture::{Conjecture, EngineConfig, EngineError, Hypothesis};
pub use corpus::{Corpus, CorpusCache, CorpusEntry, CorpusError};
pub use families::{FamilyCertificate, FamilyError};
pub use graph::{Graph, GraphError, StructuralPredicates, VertexSet};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use invariants::{InvariantError, InvariantId, InvariantRecord, Witness};
pub use theorems::{TheoremError, TheoremId, TheoremReport};
