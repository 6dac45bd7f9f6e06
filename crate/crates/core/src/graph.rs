//! Simple undirected graphs, the families the indices are usually quoted
//! for, and the structural operations (complement, Cartesian product).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are kept sorted, so equality is structural equality of
/// labelled graphs. Values are immutable once built; every transformation
/// returns a new graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Build a graph, rejecting self-loops, repeated edges and out-of-range
    /// endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::domain(format!(
                    "duplicate edge ({}, {})",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        let n = self.adj.len();
        n >= 1 && self.edge_count == n - 1 && self.is_connected()
    }

    /// Edge present iff absent here, over distinct vertex pairs.
    pub fn complement(&self) -> Graph {
        let n = self.adj.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let mut present = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        if v == u {
                            return false;
                        }
                        if present.peek() == Some(&&v) {
                            present.next();
                            false
                        } else {
                            true
                        }
                    })
                    .collect()
            })
            .collect();
        let edge_count = n * n.saturating_sub(1) / 2 - self.edge_count;
        Graph { adj, edge_count }
    }

    /// Cartesian product `self □ other`. Vertex `(u, v)` gets id
    /// `u * other.vertex_count() + v`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.vertex_count();
        let id = |u: usize, v: usize| u * nh + v;
        let mut adj = Vec::with_capacity(self.vertex_count() * nh);
        for u in 0..self.vertex_count() {
            for v in 0..nh {
                let mut list: Vec<usize> = self.adj[u]
                    .iter()
                    .map(|&u2| id(u2, v))
                    .chain(other.adj[v].iter().map(|&v2| id(u, v2)))
                    .collect();
                list.sort_unstable();
                adj.push(list);
            }
        }
        let edge_count = self.edge_count * nh + other.edge_count * self.vertex_count();
        Graph { adj, edge_count }
    }

    pub fn degree_profile(&self) -> VertexDegreeProfile {
        VertexDegreeProfile::of(self)
    }

    /// Sorted (non-decreasing) degree multiset.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Serialize in the edge-list text format (`# n=<int>` header, then one
    /// `u v` pair per line).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n={}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parse the edge-list text format.
    ///
    /// Without a `# n=` header the vertex count is one more than the largest
    /// id seen. Blank lines and other `#` comment lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(value) = comment.trim().strip_prefix("n=") {
                    if declared.is_some() || !edges.is_empty() {
                        return Err(parse_err(line_no, "`# n=` header must come first"));
                    }
                    declared = Some(value.trim().parse().map_err(|_| {
                        parse_err(line_no, format!("invalid vertex count `{}`", value.trim()))
                    })?);
                }
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(parse_err(
                    line_no,
                    format!("expected `u v`, found `{line}`"),
                ));
            };
            let parse_id = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("invalid vertex id `{s}`")))
            };
            let (u, v) = (parse_id(a)?, parse_id(b)?);
            if u == v {
                return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
            }
            edges.push((line_no, u, v));
        }

        let n = match declared {
            Some(n) => n,
            None => edges
                .iter()
                .map(|&(_, u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0),
        };
        let mut seen = std::collections::HashSet::new();
        for &(line_no, u, v) in &edges {
            if u >= n || v >= n {
                return Err(parse_err(
                    line_no,
                    format!("vertex id {} out of range for n={n}", u.max(v)),
                ));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(parse_err(
                    line_no,
                    format!("duplicate edge ({}, {})", u.min(v), u.max(v)),
                ));
            }
        }
        Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Degrees of every vertex together with Δ, δ and the edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub edge_count: usize,
}

impl VertexDegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        VertexDegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            edge_count: g.edge_count(),
            degrees,
        }
    }
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `Star(n)` is `K_{1,n-1}`: one center and `n - 1` leaves.
    Star(usize),
    /// Two adjacent centers of degrees `r` and `k`.
    DoubleStar(usize, usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    /// Vertices `1..=n`, edge `{i, j}` iff `i + j >= n + 1`.
    Monogenic(usize),
}

impl Family {
    /// Construct the family member. Vertex ids are deterministic: spine or
    /// centers first, then leaves in increasing order.
    pub fn build(self) -> Result<Graph> {
        build_family(self)
    }
}

pub fn build_family(family: Family) -> Result<Graph> {
    let at_least = |value: usize, min: usize, what: &str| -> Result<()> {
        if value < min {
            Err(Error::domain(format!(
                "{family}: {what} must be >= {min}, got {value}"
            )))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Path(n) => {
            at_least(n, 1, "n")?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle(n) => {
            at_least(n, 3, "n")?;
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Star(n) => {
            at_least(n, 1, "n")?;
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        Family::DoubleStar(r, k) => {
            at_least(r, 1, "r")?;
            at_least(k, 1, "k")?;
            let n = r + k;
            let left = (2..r + 1).map(|leaf| (0, leaf));
            let right = (r + 1..n).map(|leaf| (1, leaf));
            Graph::from_edges(n, std::iter::once((0, 1)).chain(left).chain(right))
        }
        Family::CompleteBipartite(a, b) => {
            at_least(a, 1, "a")?;
            at_least(b, 1, "b")?;
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Complete(n) => {
            at_least(n, 1, "n")?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Monogenic(n) => {
            at_least(n, 1, "n")?;
            // id v carries label v + 1
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| {
                    (u + 1..n)
                        .filter(move |&v| u + v + 2 > n)
                        .map(move |v| (u, v))
                }),
            )
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::DoubleStar(r, k) => write!(f, "double-star:{r},{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Monogenic(n) => write!(f, "monogenic:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `path:5`, `cycle:6`, `star:5`, `double-star:3,4`,
    /// `complete-bipartite:2,3`, `complete:4`, `monogenic:6`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("family `{s}` must look like `name:params`")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::domain(format!("family `{s}`: parameters must be integers")))?;
        let one = || match nums.as_slice() {
            [a] => Ok(*a),
            _ => Err(Error::domain(format!(
                "family `{name}` takes one parameter"
            ))),
        };
        let two = || match nums.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(Error::domain(format!(
                "family `{name}` takes two parameters"
            ))),
        };
        Ok(match name.trim() {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "star" => Family::Star(one()?),
            "double-star" => {
                let (r, k) = two()?;
                Family::DoubleStar(r, k)
            }
            "complete-bipartite" => {
                let (a, b) = two()?;
                Family::CompleteBipartite(a, b)
            }
            "complete" => Family::Complete(one()?),
            "monogenic" => Family::Monogenic(one()?),
            other => return Err(Error::domain(format!("unknown graph family `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiset(g: &Graph) -> Vec<usize> {
        g.degree_multiset()
    }

    #[test]
    fn path_five() {
        let g = build_family(Family::Path(5)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        assert_eq!(multiset(&g), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn monogenic_four_edges() {
        let g = build_family(Family::Monogenic(4)).unwrap();
        // labels 1..4 -> ids 0..3
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(multiset(&g), vec![1, 2, 2, 3]);
    }

    #[test]
    fn monogenic_five_degrees() {
        let g = build_family(Family::Monogenic(5)).unwrap();
        assert_eq!(multiset(&g), vec![1, 2, 2, 3, 4]);
    }

    #[test]
    fn double_star_three_four() {
        let g = build_family(Family::DoubleStar(3, 4)).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!((g.degree(0), g.degree(1)), (3, 4));
        assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), 5);
        assert!(g.is_tree());
    }

    #[test]
    fn cycle_below_three_is_rejected() {
        let err = build_family(Family::Cycle(2)).unwrap_err();
        assert!(err.to_string().contains("n must be >= 3"), "{err}");
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let k3 = build_family(Family::Complete(3)).unwrap();
        let c = k3.complement();
        assert_eq!((c.vertex_count(), c.edge_count()), (3, 0));
    }

    #[test]
    fn complement_of_p4() {
        let p4 = build_family(Family::Path(4)).unwrap();
        let edges: Vec<_> = p4.complement().edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn ladder_product() {
        let p3 = build_family(Family::Path(3)).unwrap();
        let k2 = build_family(Family::Path(2)).unwrap();
        let ladder = p3.cartesian_product(&k2);
        assert_eq!(ladder.vertex_count(), 6);
        assert_eq!(ladder.edge_count(), 7);
        assert_eq!(multiset(&ladder), vec![2, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn product_with_single_vertex_is_identity() {
        let k1 = Graph::empty(1);
        let h = build_family(Family::Star(5)).unwrap();
        assert_eq!(k1.cartesian_product(&h), h);
    }

    #[test]
    fn triangle_squared_is_four_regular() {
        let c3 = build_family(Family::Cycle(3)).unwrap();
        let g = c3.cartesian_product(&c3);
        assert_eq!(g.vertex_count(), 9);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn star_profile() {
        let p = build_family(Family::Star(5)).unwrap().degree_profile();
        assert_eq!(p.degrees, vec![4, 1, 1, 1, 1]);
        assert_eq!((p.max_degree, p.min_degree, p.edge_count), (4, 1, 4));
    }

    #[test]
    fn cycle_profile_is_regular() {
        let p = build_family(Family::Cycle(6)).unwrap().degree_profile();
        assert!(p.degrees.iter().all(|&d| d == 2));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = build_family(Family::DoubleStar(2, 3)).unwrap();
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);

        let headerless = Graph::parse_edge_list("0 1\n\n1 2\n").unwrap();
        assert_eq!(headerless.vertex_count(), 3);

        let isolated = Graph::parse_edge_list("# n=5\n0 1\n").unwrap();
        assert_eq!(isolated.vertex_count(), 5);

        match Graph::parse_edge_list("# n=3\n0 1\n2 2\n") {
            Err(Error::Parse { line: 3, message }) => assert!(message.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        match Graph::parse_edge_list("0 1\n1 2\n1 0\n") {
            Err(Error::Parse { line: 3, message }) => assert!(message.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Graph::parse_edge_list("# n=2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("0 x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn family_parsing() {
        assert_eq!("path:5".parse::<Family>().unwrap(), Family::Path(5));
        assert_eq!(
            "double-star:3,4".parse::<Family>().unwrap(),
            Family::DoubleStar(3, 4)
        );
        assert!("path:1,2".parse::<Family>().is_err());
        assert!("wheel:5".parse::<Family>().is_err());
        let f = Family::CompleteBipartite(2, 3);
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }
}
