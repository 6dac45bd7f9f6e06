use crate::bounds::{evaluate_bound, value_string, BoundId, BoundInput, BoundParams};
use crate::error::{Error, Result};
use crate::graph::Family;
use crate::indices::{albertson, sigma};
use crate::rational::decimal_string;
use crate::sequences::{Convention, DegreeSequenceView};

use super::tables::{eta, TABLE1, TABLE2};

/// A wide table of plot data: one x column and named series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Largest order in the family comparison series.
pub const FAMILY_SERIES_MAX_N: usize = 20;

/// Figure 1: Albertson and Sigma values of each family against n.
/// Figure 2: the first table with the recomputed B7 right-hand side.
/// Figure 3: the second table with printed and recomputed η.
pub fn figure_series(figure: u8) -> Result<Series> {
    match figure {
        1 => family_series(),
        2 => Ok(table1_series()),
        3 => Ok(table2_series()),
        other => Err(Error::domain(format!(
            "unknown figure {other} (expected 1, 2 or 3)"
        ))),
    }
}

type Constructor = fn(usize) -> Family;

fn family_series() -> Result<Series> {
    let families: [(&str, Constructor); 5] = [
        ("path", Family::Path),
        ("cycle", Family::Cycle),
        ("star", Family::Star),
        ("complete", Family::Complete),
        ("monogenic", Family::Monogenic),
    ];
    let mut header = vec!["n".to_string()];
    for (name, _) in &families {
        header.push(format!("{name}_irr"));
        header.push(format!("{name}_sigma"));
    }
    let mut rows = Vec::new();
    for n in 3..=FAMILY_SERIES_MAX_N {
        let mut row = vec![n.to_string()];
        for (_, make) in &families {
            let g = make(n).build()?;
            row.push(albertson(&g).to_string());
            row.push(sigma(&g).to_string());
        }
        rows.push(row);
    }
    Ok(Series { header, rows })
}

fn table1_series() -> Series {
    let header = ["row", "n", "sigma", "irr", "T1", "T2", "b7_rhs"]
        .map(String::from)
        .to_vec();
    let rows = TABLE1
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let input = BoundInput::paper_table(&r.entries, Some(r.irr)).expect("valid row");
            let report = evaluate_bound(BoundId::B7, &input, &BoundParams::default())
                .expect("all inputs present");
            let rhs = report.rhs.as_ref().map(|iv| decimal_string(&iv.lo));
            vec![
                (i + 1).to_string(),
                input.n.to_string(),
                r.sigma.to_string(),
                r.irr.to_string(),
                r.t1.to_string(),
                r.t2.to_string(),
                rhs.unwrap_or_else(|| value_string(&report.rhs)),
            ]
        })
        .collect();
    Series { header, rows }
}

fn table2_series() -> Series {
    let header = [
        "row",
        "n",
        "sigma",
        "irr",
        "lambda",
        "eta_printed",
        "eta_computed",
        "eta1_printed",
    ]
    .map(String::from)
    .to_vec();
    let rows = TABLE2
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let v = DegreeSequenceView::new(r.entries.to_vec(), Convention::PaperTable)
                .expect("valid row");
            vec![
                (i + 1).to_string(),
                r.n.to_string(),
                r.sigma.to_string(),
                r.irr.to_string(),
                decimal_string(&v.mean()),
                r.eta.to_string(),
                eta(&r.entries).to_string(),
                r.eta1.to_string(),
            ]
        })
        .collect();
    Series { header, rows }
}
