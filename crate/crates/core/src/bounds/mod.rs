//! The catalogue of inequality and identity claims about irregularity
//! indices, and an exact evaluator producing auditable reports.
//!
//! Claims are evaluated, never assumed: a report records whether the stated
//! hypotheses hold, both sides exactly (or as rigorous enclosures where a
//! root is involved), and the verdict.

mod catalog;
mod eval;
mod input;
mod params;
mod report;

pub use catalog::{BoundId, BoundSpec, CATALOG};
pub use eval::{evaluate_all, evaluate_bound, ESCALATED_BITS, ROOT_BITS};
pub use input::BoundInput;
pub use params::{is_prime, BoundParams, MaxSigmaGating, ResolvedParams};
pub use report::{
    to_csv_string, value_string, write_csv, BoundReport, Relation, Verdict, CSV_HEADER,
};
