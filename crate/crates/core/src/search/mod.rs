//! Isomorphism-free tree enumeration, extremal index search over tree
//! classes, and counterexample campaigns against the bound catalogue.

mod canonical;
mod enumerate;
mod extremal;
mod falsify;

pub use canonical::{canonical_form, centers, CanonicalTree};
pub use enumerate::{
    default_cap, enumerate_free_trees, enumerate_free_trees_capped, level_sequence_to_graph,
    FreeTrees, DEFAULT_MAX_N, MAX_N_ENV,
};
pub use extremal::{extremal, extremal_capped, Direction, Objective, SearchResult, TreeClass};
pub use falsify::{
    class_mode_report, class_mode_report_capped, falsify, falsify_capped, Counterexample,
    FalsifyMode, FalsifyOutcome,
};
