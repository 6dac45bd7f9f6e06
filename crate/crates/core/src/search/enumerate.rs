use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cap applied when neither a flag nor `IRRTOOLS_MAX_N` sets one.
pub const DEFAULT_MAX_N: usize = 18;
pub const MAX_N_ENV: &str = "IRRTOOLS_MAX_N";

/// The enumeration cap: `IRRTOOLS_MAX_N` when set to a positive integer,
/// otherwise [`DEFAULT_MAX_N`].
pub fn default_cap() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_N)
}

/// Stream of free trees on `n` vertices, one per isomorphism class, as level
/// sequences of a center-rooted representative.
///
/// Successor rule of Wright, Richmond, Odlyzko and McKay; constant amortized
/// time per tree.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    next: Option<Vec<usize>>,
}

/// Enumerate with the default cap.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    enumerate_free_trees_capped(n, default_cap())
}

pub fn enumerate_free_trees_capped(n: usize, cap: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::domain("tree order must be >= 1"));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let next = match n {
        1 => Some(vec![0]),
        2 => Some(vec![0, 1]),
        _ => {
            let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
            next_tree(layout)
        }
    };
    Ok(FreeTrees { next })
}

impl Iterator for FreeTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        if current.len() > 2 {
            self.next = next_rooted_tree(&current, None).and_then(next_tree);
        }
        Some(current)
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Split at the second depth-one vertex: the first subtree of the root
/// (levels shifted up by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&v| v - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

fn height(v: &[usize]) -> usize {
    v.iter().copied().max().unwrap_or(0)
}

/// The candidate itself if it is the canonical center-rooted sequence of a
/// free tree, otherwise the next candidate that may be.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let (lh, rh) = (height(&left), height(&rest));
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut new = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&new);
        let suffix_len = height(&new_left) + 1;
        let start = new.len() - suffix_len;
        for (slot, level) in new[start..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(new)
}

/// Graph of a level sequence: vertex `i` hangs from the nearest earlier
/// vertex one level up.
pub fn level_sequence_to_graph(levels: &[usize]) -> Result<Graph> {
    if levels.is_empty() || levels[0] != 0 {
        return Err(Error::domain(
            "level sequence must start with the root at level 0",
        ));
    }
    let mut stack: Vec<usize> = vec![0];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (v, &level) in levels.iter().enumerate().skip(1) {
        if level == 0 || level > stack.len() {
            return Err(Error::domain(format!(
                "level sequence jumps to level {level} at position {v}"
            )));
        }
        stack.truncate(level);
        edges.push((stack[level - 1], v));
        stack.push(v);
    }
    Graph::from_edges(levels.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize) -> usize {
        enumerate_free_trees_capped(n, 20).unwrap().count()
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=10).map(count).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn every_layout_is_a_tree() {
        for levels in enumerate_free_trees_capped(8, 20).unwrap() {
            let g = level_sequence_to_graph(&levels).unwrap();
            assert!(g.is_tree());
            assert_eq!(g.vertex_count(), 8);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_free_trees_capped(19, 18),
            Err(Error::CapExceeded { n: 19, cap: 18 })
        ));
        assert!(enumerate_free_trees_capped(0, 18).is_err());
    }

    #[test]
    fn level_sequence_errors() {
        assert!(level_sequence_to_graph(&[0, 2]).is_err());
        assert!(level_sequence_to_graph(&[1]).is_err());
        let star = level_sequence_to_graph(&[0, 1, 1, 1]).unwrap();
        assert_eq!(star.degree(0), 3);
    }
}
