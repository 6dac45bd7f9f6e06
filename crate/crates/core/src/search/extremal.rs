use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{albertson, sigma};
use crate::sequences::is_tree_sequence;

use super::canonical::{canonical_form, CanonicalTree};
use super::enumerate::{default_cap, enumerate_free_trees_capped, level_sequence_to_graph};

/// A class of trees searched exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeClass {
    AllTrees(usize),
    /// Trees whose degree multiset equals the given entries.
    WithDegreeMultiset(Vec<u64>),
    WithMaxDegree {
        n: usize,
        max_degree: usize,
    },
}

impl TreeClass {
    pub fn order(&self) -> usize {
        match self {
            TreeClass::AllTrees(n) | TreeClass::WithMaxDegree { n, .. } => *n,
            TreeClass::WithDegreeMultiset(e) => e.len(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            TreeClass::AllTrees(0) | TreeClass::WithMaxDegree { n: 0, .. } => {
                Err(Error::domain("tree order must be >= 1"))
            }
            TreeClass::WithDegreeMultiset(e) if !is_tree_sequence(e) => Err(Error::domain(
                format!("{e:?} is not a tree sequence (entries >= 1, sum = 2(k-1))"),
            )),
            _ => Ok(()),
        }
    }

    pub fn contains(&self, tree: &Graph) -> bool {
        match self {
            TreeClass::AllTrees(n) => tree.vertex_count() == *n,
            TreeClass::WithDegreeMultiset(e) => {
                let mut want: Vec<usize> = e.iter().map(|&d| d as usize).collect();
                want.sort_unstable();
                tree.degree_multiset() == want
            }
            TreeClass::WithMaxDegree { n, max_degree } => {
                tree.vertex_count() == *n
                    && tree.degrees().into_iter().max().unwrap_or(0) == *max_degree
            }
        }
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeClass::AllTrees(n) => write!(f, "all_trees({n})"),
            TreeClass::WithDegreeMultiset(e) => {
                let parts: Vec<String> = e.iter().map(u64::to_string).collect();
                write!(f, "trees_with_degree_multiset({})", parts.join(","))
            }
            TreeClass::WithMaxDegree { n, max_degree } => {
                write!(f, "trees_with_max_degree({n},{max_degree})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    Sigma,
    Albertson,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::Sigma => "sigma",
            Objective::Albertson => "albertson",
        }
    }

    pub fn value(self, g: &Graph) -> u64 {
        match self {
            Objective::Sigma => sigma(g),
            Objective::Albertson => albertson(g),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sigma" => Ok(Objective::Sigma),
            "albertson" | "irr" => Ok(Objective::Albertson),
            other => Err(Error::domain(format!(
                "unknown objective `{other}` (expected sigma or albertson)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Max,
    Min,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Max => "max",
            Direction::Min => "min",
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Direction::Max),
            "min" => Ok(Direction::Min),
            other => Err(Error::domain(format!(
                "unknown direction `{other}` (expected max or min)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub class: TreeClass,
    pub objective: Objective,
    pub direction: Direction,
    pub optimum: u64,
    /// Smallest canonical encoding among the optimal trees.
    pub witness: CanonicalTree,
    pub trees_examined: u64,
    pub duration: Duration,
}

impl SearchResult {
    pub fn witness_graph(&self) -> Graph {
        self.witness.to_graph()
    }

    /// JSON without the timing, so output is reproducible.
    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.to_string(),
            "objective": self.objective.name(),
            "direction": self.direction.name(),
            "optimum": self.optimum,
            "witness": self.witness.levels(),
            "witness_edge_list": self.witness_graph().to_edge_list(),
            "trees_examined": self.trees_examined,
        })
    }
}

pub fn extremal(
    class: &TreeClass,
    objective: Objective,
    direction: Direction,
) -> Result<SearchResult> {
    extremal_capped(class, objective, direction, default_cap())
}

pub fn extremal_capped(
    class: &TreeClass,
    objective: Objective,
    direction: Direction,
    cap: usize,
) -> Result<SearchResult> {
    class.validate()?;
    let start = Instant::now();
    let mut examined = 0u64;
    let mut best: Option<(u64, Vec<Graph>)> = None;
    for levels in enumerate_free_trees_capped(class.order(), cap)? {
        let g = level_sequence_to_graph(&levels)?;
        if !class.contains(&g) {
            continue;
        }
        examined += 1;
        let v = objective.value(&g);
        match &mut best {
            None => best = Some((v, vec![g])),
            Some((bv, ties)) => {
                let better = match direction {
                    Direction::Max => v > *bv,
                    Direction::Min => v < *bv,
                };
                if better {
                    *bv = v;
                    ties.clear();
                    ties.push(g);
                } else if v == *bv {
                    ties.push(g);
                }
            }
        }
    }
    let (optimum, ties) = best.ok_or_else(|| Error::domain(format!("class {class} is empty")))?;
    let witness = ties
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("at least one optimal tree");
    let check = witness.to_graph();
    if !class.contains(&check) || objective.value(&check) != optimum {
        return Err(Error::domain("witness failed re-verification"));
    }
    Ok(SearchResult {
        class: class.clone(),
        objective,
        direction,
        optimum,
        witness,
        trees_examined: examined,
        duration: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn five_vertex_extremes() {
        let max = extremal(&TreeClass::AllTrees(5), Objective::Sigma, Direction::Max).unwrap();
        assert_eq!(max.optimum, 36);
        assert_eq!(
            max.witness,
            canonical_form(&Family::Star(5).build().unwrap()).unwrap()
        );
        assert_eq!(max.trees_examined, 3);

        let min = extremal(&TreeClass::AllTrees(5), Objective::Sigma, Direction::Min).unwrap();
        assert_eq!(min.optimum, 2);
        assert_eq!(
            min.witness,
            canonical_form(&Family::Path(5).build().unwrap()).unwrap()
        );
    }

    #[test]
    fn multiset_class() {
        let class = TreeClass::WithDegreeMultiset(vec![1, 1, 1, 1, 2, 3, 3]);
        let r = extremal(&class, Objective::Sigma, Direction::Max).unwrap();
        assert!(class.contains(&r.witness_graph()));
        assert_eq!(sigma(&r.witness_graph()), r.optimum);
    }

    #[test]
    fn empty_and_invalid_classes() {
        let none = TreeClass::WithMaxDegree {
            n: 5,
            max_degree: 9,
        };
        assert!(extremal(&none, Objective::Sigma, Direction::Max).is_err());
        let bad = TreeClass::WithDegreeMultiset(vec![2, 2, 2]);
        assert!(extremal(&bad, Objective::Sigma, Direction::Max).is_err());
    }
}
