//! Exact computation of graph irregularity indices (Albertson, Sigma, total
//! Sigma, first Zagreb), degree-sequence machinery, a hypothesis-gated
//! evaluator for bounds on these indices, free-tree enumeration with
//! extremal and counterexample search, and reproduction of two published
//! data tables with their correlation and regression summaries.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod indices;
pub mod rational;
pub mod search;
pub mod sequences;
pub mod stats;

pub use bounds::{
    evaluate_all, evaluate_bound, BoundId, BoundInput, BoundParams, BoundReport, Relation, Verdict,
};
pub use error::{Error, Result};
pub use graph::{build_family, Family, Graph, VertexDegreeProfile};
pub use indices::{albertson, all_indices, sigma, sigma_t, zagreb_m1, IndexKind, IndexValue};
pub use rational::{Interval, Q};
pub use sequences::{Convention, DegreeSequenceView, DerivedSequences};
