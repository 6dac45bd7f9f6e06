//! Degree sequences, the half-difference / half-sum sequences derived from
//! them, realizability tests, and canonical realizations.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, uint, Q};

/// How a degree sequence's scalar parameters are read.
///
/// `Standard` treats the entries as the full degree multiset of a graph:
/// `n` is the entry count and `m` is half the degree sum. `PaperTable` is
/// the convention the published tables use: `n` is the *sum* of the
/// entries, `m = n - 1`, and `Δ` is the last entry (the maximum whenever
/// the entries are non-decreasing).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    Standard,
    PaperTable,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Convention::Standard),
            "paper-table" => Ok(Convention::PaperTable),
            other => Err(Error::domain(format!(
                "unknown convention `{other}` (expected standard or paper-table)"
            ))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Standard => "standard",
            Convention::PaperTable => "paper-table",
        })
    }
}

/// A degree sequence in the order given (never auto-sorted) plus the
/// convention used to read `n`, `m` and `Δ` from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequenceView {
    entries: Vec<u64>,
    convention: Convention,
}

impl DegreeSequenceView {
    pub fn new(entries: Vec<u64>, convention: Convention) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("degree sequence must be non-empty"));
        }
        if let Some(pos) = entries.iter().position(|&d| d == 0) {
            return Err(Error::domain(format!(
                "degree sequence entries must be >= 1 (entry {} is 0)",
                pos + 1
            )));
        }
        Ok(DegreeSequenceView {
            entries,
            convention,
        })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Number of entries, `k`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree_sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn cube_sum(&self) -> u64 {
        self.entries.iter().map(|d| d * d * d).sum()
    }

    /// Order `n` under the view's convention.
    pub fn order(&self) -> u64 {
        match self.convention {
            Convention::Standard => self.entries.len() as u64,
            Convention::PaperTable => self.degree_sum(),
        }
    }

    /// Size `m`. Under `Standard` this is half the degree sum (the edge count
    /// of any realization, `k - 1` for tree sequences) and is undefined when
    /// the sum is odd.
    pub fn size(&self) -> Option<u64> {
        match self.convention {
            Convention::Standard => {
                let s = self.degree_sum();
                s.is_multiple_of(2).then_some(s / 2)
            }
            Convention::PaperTable => Some(self.degree_sum() - 1),
        }
    }

    /// Δ: the maximum entry (`Standard`) or the last entry (`PaperTable`).
    pub fn max_degree(&self) -> u64 {
        match self.convention {
            Convention::Standard => self.max_entry(),
            Convention::PaperTable => self.last_entry(),
        }
    }

    pub fn max_entry(&self) -> u64 {
        *self.entries.iter().max().expect("non-empty")
    }

    pub fn min_entry(&self) -> u64 {
        *self.entries.iter().min().expect("non-empty")
    }

    pub fn last_entry(&self) -> u64 {
        *self.entries.last().expect("non-empty")
    }

    /// λ_𝒟 = Σ entries / k, exactly.
    pub fn mean(&self) -> Q {
        ratio(self.degree_sum() as i64, self.entries.len() as i64)
    }

    /// The same view with entries sorted non-decreasingly.
    pub fn sorted(&self) -> DegreeSequenceView {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        DegreeSequenceView {
            entries,
            convention: self.convention,
        }
    }
}

/// Parse a comma-separated sequence literal such as `3,5,7,5,6,8,10`.
pub fn parse_sequence_literal(s: &str) -> Result<Vec<u64>> {
    let entries: Vec<u64> = s
        .split(',')
        .map(|part| {
            part.trim().parse::<u64>().map_err(|_| {
                Error::domain(format!(
                    "malformed sequence literal `{s}`: `{}` is not a non-negative integer",
                    part.trim()
                ))
            })
        })
        .collect::<Result<_>>()?;
    if entries.is_empty() {
        return Err(Error::domain("empty sequence literal"));
    }
    Ok(entries)
}

/// The half-difference sequence ℛ and half-sum sequence 𝒜 of a degree
/// sequence: `t_i = (d_{i+1} - d_i) / 2`, `a_i = (d_{i+1} + d_i) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSequences {
    pub half_differences: Vec<Q>,
    pub half_sums: Vec<Q>,
}

impl DerivedSequences {
    pub fn from_entries(entries: &[u64]) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::domain(format!(
                "derived sequences need at least 2 entries, got {}",
                entries.len()
            )));
        }
        let half_differences = entries
            .windows(2)
            .map(|w| ratio(w[1] as i64 - w[0] as i64, 2))
            .collect();
        let half_sums = entries
            .windows(2)
            .map(|w| ratio((w[1] + w[0]) as i64, 2))
            .collect();
        Ok(DerivedSequences {
            half_differences,
            half_sums,
        })
    }

    pub fn len(&self) -> usize {
        self.half_differences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.half_differences.is_empty()
    }

    /// t_1
    pub fn t_first(&self) -> &Q {
        &self.half_differences[0]
    }

    /// t_m
    pub fn t_last(&self) -> &Q {
        self.half_differences.last().expect("non-empty")
    }

    /// a_1
    pub fn a_first(&self) -> &Q {
        &self.half_sums[0]
    }

    /// a_r
    pub fn a_last(&self) -> &Q {
        self.half_sums.last().expect("non-empty")
    }

    /// Δ_ℛ
    pub fn max_half_difference(&self) -> &Q {
        self.half_differences.iter().max().expect("non-empty")
    }

    /// Δ_𝒜
    pub fn max_half_sum(&self) -> &Q {
        self.half_sums.iter().max().expect("non-empty")
    }

    /// λ_ℛ
    pub fn mean_half_difference(&self) -> Q {
        mean(&self.half_differences)
    }

    /// λ_𝒜
    pub fn mean_half_sum(&self) -> Q {
        mean(&self.half_sums)
    }

    /// Recover the original entries: `d_i = a_i - t_i`, `d_{i+1} = a_i + t_i`.
    pub fn reconstruct(&self) -> Vec<Q> {
        let mut out: Vec<Q> = vec![self.half_sums[0].clone() - self.half_differences[0].clone()];
        out.extend(
            self.half_sums
                .iter()
                .zip(&self.half_differences)
                .map(|(a, t)| a + t),
        );
        out
    }
}

fn mean(values: &[Q]) -> Q {
    let total = values.iter().fold(Q::zero(), |acc, v| acc + v);
    total / uint(values.len() as u64)
}

/// ℛ and 𝒜 of a view, in the view's order.
pub fn derive(seq: &DegreeSequenceView) -> Result<DerivedSequences> {
    DerivedSequences::from_entries(seq.entries())
}

/// Erdős–Gallai test.
pub fn is_graphical(entries: &[u64]) -> bool {
    let mut d = entries.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: u64 = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=d.len() {
        prefix += d[k - 1];
        let kk = k as u64;
        let tail: u64 = d[k..].iter().map(|&x| x.min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}

/// All entries positive and Σ d = 2(k - 1).
pub fn is_tree_sequence(entries: &[u64]) -> bool {
    !entries.is_empty()
        && entries.iter().all(|&d| d >= 1)
        && entries.iter().sum::<u64>() == 2 * (entries.len() as u64 - 1)
}

/// Caterpillar realization of a tree sequence: entries greater than one are
/// sorted onto a spine (ids `0..p`), leaves follow and attach greedily to
/// the spine in order.
pub fn realize_tree(entries: &[u64]) -> Result<Graph> {
    if !is_tree_sequence(entries) {
        let sum: u64 = entries.iter().sum();
        return Err(Error::domain(format!(
            "not a tree sequence: need all entries >= 1 and sum = 2(k-1) = {}, got sum {sum}",
            2 * (entries.len() as i64 - 1)
        )));
    }
    let k = entries.len();
    let mut spine: Vec<u64> = entries.iter().copied().filter(|&d| d > 1).collect();
    spine.sort_unstable();
    let p = spine.len();
    if p == 0 {
        return Graph::from_edges(2, [(0, 1)]);
    }
    let mut edges: Vec<(usize, usize)> = (1..p).map(|i| (i - 1, i)).collect();
    let mut next_leaf = p;
    for (i, &d) in spine.iter().enumerate() {
        let spine_neighbors = usize::from(i > 0) + usize::from(i + 1 < p);
        for _ in 0..(d as usize - spine_neighbors) {
            edges.push((i, next_leaf));
            next_leaf += 1;
        }
    }
    debug_assert_eq!(next_leaf, k);
    Graph::from_edges(k, edges)
}

/// Havel–Hakimi realization. Vertex `i` receives degree `entries[i]`.
pub fn realize_graph_hakimi(entries: &[u64]) -> Result<Graph> {
    if !is_graphical(entries) {
        return Err(Error::domain(format!(
            "sequence {entries:?} is not graphical (Erdős–Gallai fails)"
        )));
    }
    let n = entries.len();
    let mut remaining: Vec<(u64, usize)> = entries.iter().copied().zip(0..n).collect();
    let mut edges = Vec::new();
    loop {
        // highest residual degree first, ties by vertex id
        remaining.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = remaining[0];
        if d == 0 {
            break;
        }
        remaining[0].0 = 0;
        for slot in remaining.iter_mut().skip(1).take(d as usize) {
            if slot.0 == 0 {
                return Err(Error::domain("Havel–Hakimi reduction failed"));
            }
            slot.0 -= 1;
            edges.push((v, slot.1));
        }
    }
    Graph::from_edges(n, edges)
}

/// Decode a Prüfer word over `0..n` into a labelled tree on `n` vertices.
pub fn prufer_decode(word: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return if word.is_empty() {
            Ok(Graph::empty(n))
        } else {
            Err(Error::domain("Prüfer word too long"))
        };
    }
    if word.len() != n - 2 || word.iter().any(|&x| x >= n) {
        return Err(Error::domain(format!(
            "Prüfer word for n={n} must have length {} with symbols < {n}",
            n - 2
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in word {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in word {
        edges.push((leaf, x));
        degree[x] -= 1;
        if x < ptr && degree[x] == 1 {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges)
}

/// Uniform random labelled tree on `n` vertices via a random Prüfer word.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

pub(crate) fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let word: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&word, n).expect("valid Prüfer word")
}

/// Erdős–Rényi G(n, p) with a seeded generator.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .collect();
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn derive_small_sequence() {
        let view = DegreeSequenceView::new(vec![1, 1, 2, 3], Convention::Standard).unwrap();
        let d = derive(&view).unwrap();
        assert_eq!(d.half_differences, vec![int(0), ratio(1, 2), ratio(1, 2)]);
        assert_eq!(d.half_sums, vec![int(1), ratio(3, 2), ratio(5, 2)]);
    }

    #[test]
    fn derive_first_table_row_as_printed() {
        let view =
            DegreeSequenceView::new(vec![3, 5, 7, 5, 6, 8, 10], Convention::PaperTable).unwrap();
        let d = derive(&view).unwrap();
        assert_eq!(d.t_last(), &int(1));
        assert_eq!(d.a_last(), &int(9));
        // unsorted input: Δ_ℛ differs from t_m
        assert_eq!(d.max_half_difference(), &int(1));
        assert_eq!(d.t_first(), &int(1));
        assert_eq!(d.half_differences[2], int(-1));
    }

    #[test]
    fn derive_regular_sequence() {
        let d = DerivedSequences::from_entries(&[4, 4, 4, 4]).unwrap();
        assert!(d.half_differences.iter().all(Zero::is_zero));
        assert!(d.half_sums.iter().all(|a| *a == int(4)));
    }

    #[test]
    fn derive_needs_two_entries() {
        assert!(DerivedSequences::from_entries(&[3]).is_err());
    }

    #[test]
    fn paper_table_scalars() {
        let view =
            DegreeSequenceView::new(vec![3, 6, 8, 10, 14, 16, 20], Convention::PaperTable).unwrap();
        assert_eq!(view.order(), 77);
        assert_eq!(view.size(), Some(76));
        assert_eq!(view.mean(), int(11));
        let unsorted =
            DegreeSequenceView::new(vec![15, 14, 16, 23, 24, 26, 25], Convention::PaperTable)
                .unwrap();
        assert_eq!(unsorted.max_degree(), 25);
        assert_eq!(unsorted.max_entry(), 26);
        assert_eq!(unsorted.sorted().entries(), &[14, 15, 16, 23, 24, 25, 26]);
    }

    #[test]
    fn standard_scalars() {
        let view = DegreeSequenceView::new(vec![1, 1, 1, 3], Convention::Standard).unwrap();
        assert_eq!(
            (view.order(), view.size(), view.max_degree()),
            (4, Some(3), 3)
        );
        let odd = DegreeSequenceView::new(vec![1, 2], Convention::Standard).unwrap();
        assert_eq!(odd.size(), None);
    }

    #[test]
    fn zero_entries_rejected() {
        assert!(DegreeSequenceView::new(vec![1, 0], Convention::Standard).is_err());
        assert!(DegreeSequenceView::new(vec![], Convention::Standard).is_err());
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(parse_sequence_literal("3, 5,7").unwrap(), vec![3, 5, 7]);
        assert!(parse_sequence_literal("3,,5").is_err());
        assert!(parse_sequence_literal("3,-1").is_err());
    }

    #[test]
    fn graphical_examples() {
        assert!(is_graphical(&[3, 3, 3, 3]));
        assert!(is_graphical(&[2, 2, 2]));
        assert!(!is_tree_sequence(&[2, 2, 2]));
        assert!(is_tree_sequence(&[3, 1, 1, 1]));
        assert!(!is_graphical(&[3, 3, 1, 1]));
        assert!(!is_graphical(&[4, 1, 1]));
        assert!(!is_graphical(&[1, 1, 1]));
        assert!(is_graphical(&[0, 0]));
    }

    #[test]
    fn realize_forced_trees() {
        let star = realize_tree(&[1, 1, 1, 3]).unwrap();
        assert_eq!(star.degree_multiset(), vec![1, 1, 1, 3]);
        assert_eq!(star.degree(0), 3);
        let path = realize_tree(&[1, 1, 2, 2]).unwrap();
        assert_eq!(path.degree_multiset(), vec![1, 1, 2, 2]);
        assert!(path.is_tree());
        let k2 = realize_tree(&[1, 1]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn realize_caterpillar() {
        let entries = [1, 1, 1, 1, 2, 2, 2, 3, 3];
        let t = realize_tree(&entries).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.vertex_count(), 9);
        let spine: Vec<usize> = (0..5).map(|v| t.degree(v)).collect();
        assert_eq!(spine, vec![2, 2, 2, 3, 3]);
        let mut want = entries.to_vec();
        want.sort_unstable();
        assert_eq!(
            t.degree_multiset(),
            want.iter().map(|&d| d as usize).collect::<Vec<_>>()
        );
    }

    #[test]
    fn realize_tree_rejects_non_tree() {
        let err = realize_tree(&[2, 2, 2]).unwrap_err();
        assert!(err.to_string().contains("sum = 2(k-1)"), "{err}");
    }

    #[test]
    fn hakimi_examples() {
        let k4 = realize_graph_hakimi(&[3, 3, 3, 3]).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let c3 = realize_graph_hakimi(&[2, 2, 2]).unwrap();
        assert_eq!(c3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let star = realize_graph_hakimi(&[4, 1, 1, 1, 1]).unwrap();
        assert_eq!(star.degrees(), vec![4, 1, 1, 1, 1]);
        assert!(realize_graph_hakimi(&[3, 1]).is_err());
    }

    #[test]
    fn random_tree_contract() {
        assert_eq!(random_tree(1, 7).vertex_count(), 1);
        for seed in 0..5 {
            let t = random_tree(3, seed);
            assert_eq!(t.degree_multiset(), vec![1, 1, 2]);
        }
        assert_eq!(random_tree(8, 42), random_tree(8, 42));
        assert!(random_tree(20, 3).is_tree());
    }

    #[test]
    fn prufer_decode_known_word() {
        // word (3,3,3) on 5 vertices is the star centred at 3 plus leaf 4 hanging off 3
        let t = prufer_decode(&[3, 3, 3], 5).unwrap();
        assert_eq!(t.degree(3), 4);
        assert!(t.is_tree());
        assert!(prufer_decode(&[9], 3).is_err());
    }
}
