use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{albertson, sigma, sigma_closed_form};
use crate::rational::{ratio, Q};
use crate::sequences::{
    is_graphical, is_tree_sequence, realize_graph_hakimi, realize_tree, Convention,
    DegreeSequenceView, DerivedSequences,
};

/// Everything the catalogue formulas read, resolved once per input.
///
/// `entries` are the degrees in the order the formulas see them: as given
/// for a sequence view, non-decreasing for a graph. `cube_sum` and the
/// derived sequences are taken over exactly these entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInput {
    pub label: String,
    pub convention: Convention,
    pub entries: Vec<u64>,
    pub n: u64,
    pub m: Option<u64>,
    /// Δ under the convention.
    pub max_degree: u64,
    /// λ_𝒟, the mean entry.
    pub mean: Q,
    pub derived: Option<DerivedSequences>,
    pub irr: Option<u64>,
    pub sigma: Option<u64>,
    pub cube_sum: u64,
    pub graph: Option<Graph>,
    pub is_tree: bool,
    pub notes: Vec<String>,
}

impl BoundInput {
    /// Input from a realized graph under the standard convention.
    pub fn from_graph(label: impl Into<String>, g: &Graph) -> Result<Self> {
        if g.vertex_count() == 0 {
            return Err(Error::domain("bound evaluation needs at least one vertex"));
        }
        let mut entries: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).collect();
        entries.sort_unstable();
        let n = entries.len() as u64;
        let sum: u64 = entries.iter().sum();
        Ok(BoundInput {
            label: label.into(),
            convention: Convention::Standard,
            derived: DerivedSequences::from_entries(&entries).ok(),
            n,
            m: Some(g.edge_count() as u64),
            max_degree: *entries.last().expect("non-empty"),
            mean: ratio(sum as i64, n as i64),
            irr: Some(albertson(g)),
            sigma: Some(sigma(g)),
            cube_sum: entries.iter().map(|d| d * d * d).sum(),
            graph: Some(g.clone()),
            is_tree: g.is_tree(),
            notes: Vec::new(),
            entries,
        })
    }

    /// Input from a degree sequence.
    ///
    /// Under `PaperTable`, σ comes from the closed form over the entries in
    /// the given order and the tree shape is implied by `m = n - 1`; `irr`
    /// has no generator and must be supplied to evaluate claims that read it.
    ///
    /// Under `Standard`, a tree sequence is realized as a caterpillar and any
    /// other graphical sequence by Havel–Hakimi; `irr` and σ are then read
    /// off the realization. A supplied `irr` overrides the realized value.
    pub fn from_view(view: &DegreeSequenceView, irr: Option<u64>) -> Result<Self> {
        let entries = view.entries().to_vec();
        let mut notes = Vec::new();
        let (graph, is_tree, sigma_value) = match view.convention() {
            Convention::PaperTable => {
                let s = sigma_closed_form(view).ok();
                if s.is_none() {
                    notes.push("sigma closed form needs at least 2 entries".into());
                }
                (None, true, s)
            }
            Convention::Standard => {
                if is_tree_sequence(&entries) {
                    let g = realize_tree(&entries)?;
                    notes.push("realized as a caterpillar tree".into());
                    let s = sigma(&g);
                    (Some(g), true, Some(s))
                } else if is_graphical(&entries) {
                    let g = realize_graph_hakimi(&entries)?;
                    notes.push("realized by Havel-Hakimi (not a tree sequence)".into());
                    let s = sigma(&g);
                    (Some(g), false, Some(s))
                } else {
                    notes.push("sequence is not graphical; no realization".into());
                    (None, false, None)
                }
            }
        };
        let irr = irr.or_else(|| graph.as_ref().map(albertson));
        Ok(BoundInput {
            label: entries
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            convention: view.convention(),
            derived: DerivedSequences::from_entries(&entries).ok(),
            n: view.order(),
            m: view.size(),
            max_degree: view.max_degree(),
            mean: view.mean(),
            irr,
            sigma: sigma_value,
            cube_sum: view.cube_sum(),
            graph,
            is_tree,
            notes,
            entries,
        })
    }

    /// A printed table row: `PaperTable` convention with the given `irr`.
    pub fn paper_table(entries: &[u64], irr: Option<u64>) -> Result<Self> {
        let view = DegreeSequenceView::new(entries.to_vec(), Convention::PaperTable)?;
        BoundInput::from_view(&view, irr)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// d_n, the last entry.
    pub fn last_entry(&self) -> u64 {
        *self.entries.last().expect("non-empty")
    }

    pub(crate) fn need_irr(&self) -> Result<u64> {
        self.irr.ok_or_else(|| {
            Error::missing("irr", "no realized graph and no supplied Albertson value")
        })
    }

    pub(crate) fn need_sigma(&self) -> Result<u64> {
        self.sigma
            .ok_or_else(|| Error::missing("sigma", "no realized graph and no closed form"))
    }

    pub(crate) fn need_m(&self) -> Result<u64> {
        self.m
            .ok_or_else(|| Error::missing("m", "degree sum is odd, so the size is undefined"))
    }

    pub(crate) fn need_derived(&self) -> Result<&DerivedSequences> {
        self.derived
            .as_ref()
            .ok_or_else(|| Error::missing("derived", "derived sequences need at least 2 entries"))
    }

    pub(crate) fn need_graph(&self) -> Result<&Graph> {
        self.graph
            .as_ref()
            .ok_or_else(|| Error::missing("graph", "this claim is evaluated on a realized graph"))
    }
}
