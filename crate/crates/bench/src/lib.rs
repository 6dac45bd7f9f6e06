//! Shared inputs for the benchmarks.

use irrtools::graph::Family;
use irrtools::sequences::{random_gnp, random_tree};
use irrtools::Graph;

/// Named graphs of roughly `n` vertices covering sparse and dense cases.
pub fn fixture_graphs(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![
        (
            format!("path:{n}"),
            Family::Path(n).build().expect("n >= 1"),
        ),
        (
            format!("star:{n}"),
            Family::Star(n).build().expect("n >= 1"),
        ),
        (
            format!("monogenic:{n}"),
            Family::Monogenic(n).build().expect("n >= 1"),
        ),
        (format!("random_tree:{n}"), random_tree(n, 7)),
    ];
    out.push((format!("gnp:{n}:0.3"), random_gnp(n, 0.3, 7)));
    out
}
