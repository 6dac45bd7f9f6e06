use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::enumerate::level_sequence_to_graph;

/// Canonical level sequence of a free tree rooted at its center.
///
/// Children are ordered by their own canonical sequences, largest first;
/// for a bicentral tree the larger of the two rootings is kept. Two trees
/// are isomorphic exactly when their encodings are equal. The derived
/// ordering is the tie-break order used by searches.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTree(pub Vec<usize>);

impl CanonicalTree {
    pub fn levels(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn to_graph(&self) -> Graph {
        level_sequence_to_graph(&self.0).expect("canonical sequences are well formed")
    }
}

impl fmt::Display for CanonicalTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for CanonicalTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.0)
    }
}

/// The one or two centers, by repeatedly stripping leaves.
pub fn centers(tree: &Graph) -> Vec<usize> {
    let n = tree.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = tree.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical sequence of the tree rooted at `root`.
fn rooted_sequence(tree: &Graph, root: usize) -> Vec<usize> {
    let n = tree.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    // sequences relative to each subtree root (root at level 0)
    let mut kids: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut kids[v]);
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = vec![0];
        for c in children {
            seq.extend(c.into_iter().map(|l| l + 1));
        }
        if v == root {
            return seq;
        }
        kids[parent[v]].push(seq);
    }
    unreachable!("root is visited last")
}

pub fn canonical_form(tree: &Graph) -> Result<CanonicalTree> {
    if tree.vertex_count() == 0 || !tree.is_tree() {
        return Err(Error::domain(
            "canonical form needs a tree (connected, m = n - 1)",
        ));
    }
    let best = centers(tree)
        .into_iter()
        .map(|c| rooted_sequence(tree, c))
        .max()
        .expect("a tree has a center");
    Ok(CanonicalTree(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn path_relabelings_agree() {
        let a = Family::Path(4).build().unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p = canonical_form(&Family::Path(4).build().unwrap()).unwrap();
        let s = canonical_form(&Family::Star(4).build().unwrap()).unwrap();
        assert_ne!(p, s);
        assert_eq!(s.levels(), &[0, 1, 1, 1]);
        assert_eq!(p.levels(), &[0, 1, 2, 1]);
    }

    #[test]
    fn round_trip_through_graph() {
        let g = Family::DoubleStar(3, 4).build().unwrap();
        let c = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&c.to_graph()).unwrap(), c);
    }

    #[test]
    fn centers_of_small_trees() {
        assert_eq!(centers(&Family::Path(5).build().unwrap()), vec![2]);
        assert_eq!(centers(&Family::Path(4).build().unwrap()), vec![1, 2]);
        assert_eq!(centers(&Family::Path(1).build().unwrap()), vec![0]);
    }

    #[test]
    fn non_tree_rejected() {
        assert!(canonical_form(&Family::Cycle(4).build().unwrap()).is_err());
    }
}
