use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::{evaluate_bound, BoundId, BoundInput, BoundParams, BoundReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequences::random_tree_with;

use super::canonical::{canonical_form, CanonicalTree};
use super::enumerate::{default_cap, enumerate_free_trees_capped, level_sequence_to_graph};
use super::extremal::{extremal_capped, Direction, Objective, TreeClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FalsifyMode {
    /// Every free tree with 1..=n_max vertices.
    Exhaustive { n_max: usize },
    /// Uniform random labelled trees of order `n`.
    Random { n: usize, samples: usize, seed: u64 },
}

/// A tree meeting a claim's hypotheses on which the claim evaluates false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub bound_id: BoundId,
    pub canonical: CanonicalTree,
    pub graph: Graph,
    pub report: BoundReport,
}

impl Counterexample {
    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bound_id": self.bound_id.to_string(),
            "n": self.order(),
            "canonical": self.canonical.levels(),
            "edge_list": self.graph.to_edge_list(),
            "params": self.report.params,
            "report": self.report.to_json(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FalsifyOutcome {
    pub bound_id: BoundId,
    pub mode: FalsifyMode,
    /// Sorted by (order, canonical encoding), one per isomorphism class.
    pub counterexamples: Vec<Counterexample>,
    pub trees_examined: u64,
    /// Trees on which the claim could not be evaluated (a required
    /// quantity is undefined, e.g. derived sequences of a single vertex).
    pub skipped: u64,
}

impl FalsifyOutcome {
    pub fn to_json(&self) -> Value {
        let mode = match self.mode {
            FalsifyMode::Exhaustive { n_max } => json!({"kind": "exhaustive", "n_max": n_max}),
            FalsifyMode::Random { n, samples, seed } => {
                json!({"kind": "random", "n": n, "samples": samples, "seed": seed})
            }
        };
        json!({
            "bound_id": self.bound_id.to_string(),
            "mode": mode,
            "trees_examined": self.trees_examined,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples.iter().map(Counterexample::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn falsify(bound: BoundId, mode: FalsifyMode, params: &BoundParams) -> Result<FalsifyOutcome> {
    falsify_capped(bound, mode, params, default_cap())
}

pub fn falsify_capped(
    bound: BoundId,
    mode: FalsifyMode,
    params: &BoundParams,
    cap: usize,
) -> Result<FalsifyOutcome> {
    params.validate()?;
    let mut found: BTreeMap<(usize, CanonicalTree), Counterexample> = BTreeMap::new();
    let mut examined = 0u64;
    let mut skipped = 0u64;
    let mut visit = |g: Graph, canonical: Option<CanonicalTree>| -> Result<()> {
        examined += 1;
        let input = BoundInput::from_graph(String::new(), &g)?;
        let report = match evaluate_bound(bound, &input, params) {
            Ok(r) => r,
            Err(Error::MissingInput { .. }) => {
                skipped += 1;
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        if report.is_counterexample() {
            let canonical = match canonical {
                Some(c) => c,
                None => canonical_form(&g)?,
            };
            let key = (g.vertex_count(), canonical.clone());
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(key) {
                // store the canonical representative so replays are label-free
                let graph = canonical.to_graph();
                let input = BoundInput::from_graph(canonical.to_string(), &graph)?;
                let report = evaluate_bound(bound, &input, params)?;
                e.insert(Counterexample {
                    bound_id: bound,
                    canonical,
                    graph,
                    report,
                });
            }
        }
        Ok(())
    };
    match mode {
        FalsifyMode::Exhaustive { n_max } => {
            for n in 1..=n_max {
                for levels in enumerate_free_trees_capped(n, cap)? {
                    let g = level_sequence_to_graph(&levels)?;
                    visit(g, None)?;
                }
            }
        }
        FalsifyMode::Random { n, samples, seed } => {
            if n == 0 {
                return Err(Error::domain("tree order must be >= 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                visit(random_tree_with(n, &mut rng), None)?;
            }
        }
    }
    Ok(FalsifyOutcome {
        bound_id: bound,
        mode,
        counterexamples: found.into_values().collect(),
        trees_examined: examined,
        skipped,
    })
}

/// Evaluate a claim stated for the extreme of the class of trees with `n`
/// vertices and maximum degree `max_degree`, rather than for one instance:
/// the lower-Albertson ratio (B1) on the class minimum of irr, the
/// upper-Albertson bounds (B2) on its maximum, and the maximum-Sigma bound
/// (B10) on the class maximum of σ.
pub fn class_mode_report(
    bound: BoundId,
    n: usize,
    max_degree: usize,
    params: &BoundParams,
) -> Result<BoundReport> {
    class_mode_report_capped(bound, n, max_degree, params, default_cap())
}

pub fn class_mode_report_capped(
    bound: BoundId,
    n: usize,
    max_degree: usize,
    params: &BoundParams,
    cap: usize,
) -> Result<BoundReport> {
    let (objective, direction) = match bound {
        BoundId::B1a | BoundId::B1b => (Objective::Albertson, Direction::Min),
        BoundId::B2a | BoundId::B2b => (Objective::Albertson, Direction::Max),
        BoundId::B10 => (Objective::Sigma, Direction::Max),
        other => {
            return Err(Error::domain(format!(
                "{other} has no class mode (only B1a, B1b, B2a, B2b, B10)"
            )))
        }
    };
    let class = TreeClass::WithMaxDegree { n, max_degree };
    let best = extremal_capped(&class, objective, direction, cap)?;
    let graph = best.witness_graph();
    let input = BoundInput::from_graph(class.to_string(), &graph)?;
    let mut report = evaluate_bound(bound, &input, params)?;
    report.notes.retain(|n| !n.contains("instance"));
    report.notes.push(format!(
        "class mode: {} {} over {} = {} (witness {})",
        objective.name(),
        direction.name(),
        class,
        best.optimum,
        best.witness
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::rational::{int, ratio};

    #[test]
    fn b8_counterexamples_include_path_six() {
        let out = falsify(
            BoundId::B8,
            FalsifyMode::Exhaustive { n_max: 6 },
            &BoundParams::default(),
        )
        .unwrap();
        let p6 = canonical_form(&Family::Path(6).build().unwrap()).unwrap();
        let hit = out
            .counterexamples
            .iter()
            .find(|c| c.canonical == p6)
            .expect("P6 is a counterexample");
        assert_eq!(hit.report.lhs.as_ref().unwrap().lo, int(2));
        assert_eq!(hit.report.rhs.as_ref().unwrap().lo, ratio(336, 5));
        assert!(out
            .counterexamples
            .iter()
            .all(|c| c.report.hypotheses_met && c.report.holds() == Some(false)));
    }

    #[test]
    fn complement_identity_has_no_counterexample() {
        let out = falsify(
            BoundId::B14,
            FalsifyMode::Exhaustive { n_max: 8 },
            &BoundParams::default(),
        )
        .unwrap();
        assert!(out.counterexamples.is_empty());
        assert_eq!(out.trees_examined, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23);
    }

    #[test]
    fn random_mode_is_seed_deterministic() {
        let mode = FalsifyMode::Random {
            n: 9,
            samples: 40,
            seed: 7,
        };
        let a = falsify(BoundId::B8, mode, &BoundParams::default()).unwrap();
        let b = falsify(BoundId::B8, mode, &BoundParams::default()).unwrap();
        assert_eq!(a, b);
        assert!(!a.counterexamples.is_empty());
    }

    #[test]
    fn counterexamples_replay() {
        let out = falsify(
            BoundId::B9,
            FalsifyMode::Exhaustive { n_max: 6 },
            &BoundParams::default(),
        )
        .unwrap();
        for c in &out.counterexamples {
            let input = BoundInput::from_graph(c.canonical.to_string(), &c.graph).unwrap();
            let again = evaluate_bound(c.bound_id, &input, &BoundParams::default()).unwrap();
            assert_eq!(again, c.report);
        }
    }

    #[test]
    fn class_mode() {
        let r = class_mode_report(BoundId::B10, 9, 4, &BoundParams::default()).unwrap();
        assert!(r.notes.iter().any(|n| n.starts_with("class mode")));
        assert!(class_mode_report(BoundId::B8, 9, 4, &BoundParams::default()).is_err());
    }
}
