use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::indices::sigma_closed_form;
use crate::rational::{decimal_string, fraction_string, int, parse_decimal, ratio, uint, Q};
use crate::sequences::{Convention, DegreeSequenceView};

/// A row of the lower-bound table: degree sequence with T1, T2, irr, σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub entries: [u64; 7],
    pub t1: u64,
    pub t2: u64,
    pub irr: u64,
    pub sigma: u64,
}

/// A row of the η table. Decimal columns keep their printed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table2Row {
    pub entries: [u64; 7],
    pub n: u64,
    pub irr: u64,
    pub sigma: u64,
    pub lambda: &'static str,
    pub eta: i64,
    pub eta1: &'static str,
}

pub const TABLE1: [Table1Row; 8] = [
    Table1Row {
        entries: [3, 5, 7, 5, 6, 8, 10],
        t1: 160,
        t2: 2107,
        irr: 260,
        sigma: 2248,
    },
    Table1Row {
        entries: [7, 8, 10, 11, 12, 14, 15],
        t1: 280,
        t2: 11293,
        irr: 810,
        sigma: 10747,
    },
    Table1Row {
        entries: [11, 11, 13, 17, 18, 20, 20],
        t1: 399,
        t2: 32842,
        irr: 1694,
        sigma: 31070,
    },
    Table1Row {
        entries: [15, 14, 16, 23, 24, 26, 25],
        t1: 519,
        t2: 72197,
        irr: 2912,
        sigma: 68563,
    },
    Table1Row {
        entries: [19, 17, 19, 29, 30, 32, 30],
        t1: 637,
        t2: 134229,
        irr: 4464,
        sigma: 128572,
    },
    Table1Row {
        entries: [23, 20, 22, 35, 36, 38, 35],
        t1: 757,
        t2: 224942,
        irr: 6350,
        sigma: 216443,
    },
    Table1Row {
        entries: [27, 23, 25, 41, 42, 44, 40],
        t1: 876,
        t2: 348993,
        irr: 8570,
        sigma: 337522,
    },
    Table1Row {
        entries: [31, 26, 28, 47, 48, 50, 45],
        t1: 996,
        t2: 512397,
        irr: 11124,
        sigma: 497155,
    },
];

pub const TABLE2: [Table2Row; 4] = [
    Table2Row {
        entries: [3, 6, 8, 10, 14, 16, 20],
        n: 77,
        irr: 980,
        sigma: 16209,
        lambda: "11",
        eta: 21,
        eta1: "2.12",
    },
    Table2Row {
        entries: [7, 9, 12, 14, 20, 24, 27],
        n: 113,
        irr: 2050,
        sigma: 46312,
        lambda: "16.14",
        eta: 31,
        eta1: "2.18",
    },
    Table2Row {
        entries: [11, 12, 16, 23, 26, 32, 34],
        n: 154,
        irr: 3732,
        sigma: 107753,
        lambda: "22",
        eta: 41,
        eta1: "1",
    },
    Table2Row {
        entries: [15, 15, 20, 32, 32, 40, 45],
        n: 199,
        irr: 6296,
        sigma: 233350,
        lambda: "28.42",
        eta: 51,
        eta1: "3.1",
    },
];

/// Tolerance for cells printed with two decimals.
pub const DECIMAL_CELL_TOLERANCE: (i64, i64) = (5, 1000);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    One,
    Two,
}

impl TableId {
    pub fn number(self) -> u8 {
        match self {
            TableId::One => 1,
            TableId::Two => 2,
        }
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(TableId::One),
            "2" => Ok(TableId::Two),
            other => Err(Error::domain(format!(
                "unknown table `{other}` (expected 1 or 2)"
            ))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellStatus {
    Match,
    Mismatch,
    NotDerivable,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::Mismatch => "mismatch",
            CellStatus::NotDerivable => "not_derivable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    /// 1-based.
    pub row: usize,
    pub column: &'static str,
    pub printed: String,
    pub recomputed: Option<String>,
    pub status: CellStatus,
    pub rule: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReproductionReport {
    pub table: TableId,
    pub cells: Vec<CellReport>,
}

pub const REPORT_CSV_HEADER: [&str; 7] = [
    "table",
    "row",
    "column",
    "printed",
    "recomputed",
    "status",
    "rule",
];

impl ReproductionReport {
    pub fn column(&self, name: &str) -> impl Iterator<Item = &CellReport> + '_ {
        let name = name.to_string();
        self.cells.iter().filter(move |c| c.column == name)
    }

    /// (matches, cells) for one column.
    pub fn tally(&self, name: &str) -> (usize, usize) {
        let cells: Vec<_> = self.column(name).collect();
        let hits = cells
            .iter()
            .filter(|c| c.status == CellStatus::Match)
            .count();
        (hits, cells.len())
    }

    pub fn csv_records(&self) -> Vec<[String; 7]> {
        self.cells
            .iter()
            .map(|c| {
                [
                    self.table.to_string(),
                    c.row.to_string(),
                    c.column.to_string(),
                    c.printed.clone(),
                    c.recomputed.clone().unwrap_or_default(),
                    c.status.as_str().to_string(),
                    c.rule.to_string(),
                ]
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                json!({
                    "row": c.row,
                    "column": c.column,
                    "printed": c.printed,
                    "recomputed": c.recomputed,
                    "status": c.status.as_str(),
                    "rule": c.rule,
                })
            })
            .collect();
        json!({ "table": self.table.number(), "cells": cells })
    }
}

fn view(entries: &[u64]) -> DegreeSequenceView {
    DegreeSequenceView::new(entries.to_vec(), Convention::PaperTable).expect("table rows are valid")
}

/// ⌊(3n+1)/2⌋ + ⌈(3m+1)/2⌉ + ⌊(3Δ+2n)/4⌋ with the table convention.
pub fn t1(entries: &[u64]) -> u64 {
    let v = view(entries);
    let (n, m, d) = (v.order(), v.size().expect("defined"), v.max_degree());
    (3 * n).div_ceil(2) + (3 * m + 1).div_ceil(2) + (3 * d + 2 * n) / 4
}

/// ⌊λ_𝒟² T1 / 3⌋.
pub fn t2(entries: &[u64]) -> u64 {
    let v = view(entries);
    let lambda = v.mean();
    let value = &lambda * &lambda * uint(t1(entries)) / int(3);
    integer(&value.floor())
}

/// ⌈2nΔ/m⌉ with the table convention.
pub fn eta(entries: &[u64]) -> i64 {
    let v = view(entries);
    let (n, m, d) = (v.order(), v.size().expect("defined"), v.max_degree());
    (2 * n * d).div_ceil(m) as i64
}

fn integer(q: &Q) -> u64 {
    q.to_integer().try_into().expect("fits in u64")
}

fn exact_cell(
    row: usize,
    column: &'static str,
    printed: u64,
    computed: u64,
    rule: &'static str,
) -> CellReport {
    CellReport {
        row,
        column,
        printed: printed.to_string(),
        recomputed: Some(computed.to_string()),
        status: if printed == computed {
            CellStatus::Match
        } else {
            CellStatus::Mismatch
        },
        rule,
    }
}

fn given_cell(row: usize, column: &'static str, printed: String, rule: &'static str) -> CellReport {
    CellReport {
        row,
        column,
        printed,
        recomputed: None,
        status: CellStatus::NotDerivable,
        rule,
    }
}

const RULE_T1: &str = "floor((3n+1)/2)+ceil((3m+1)/2)+floor((3D+2n)/4); n=sum, m=n-1, D=last entry";
const RULE_T2: &str = "floor(lambda^2*T1/3)";
const RULE_SIGMA: &str = "sigma closed form over the entries";
const RULE_IRR: &str = "no generator; printed value used as data";
const RULE_N: &str = "n = sum of entries";
const RULE_LAMBDA: &str = "lambda = sum/k; match when |diff| <= 0.005";
const RULE_ETA: &str = "eta = ceil(2nD/m)";
const RULE_ETA1: &str = "no generator; printed value used as data";

pub fn reproduce_table(table: TableId) -> ReproductionReport {
    let mut cells = Vec::new();
    match table {
        TableId::One => {
            for (i, row) in TABLE1.iter().enumerate() {
                let r = i + 1;
                let s = sigma_closed_form(&view(&row.entries)).expect("7 entries");
                cells.push(exact_cell(r, "T1", row.t1, t1(&row.entries), RULE_T1));
                cells.push(exact_cell(r, "T2", row.t2, t2(&row.entries), RULE_T2));
                cells.push(given_cell(r, "irr", row.irr.to_string(), RULE_IRR));
                cells.push(exact_cell(r, "sigma", row.sigma, s, RULE_SIGMA));
            }
        }
        TableId::Two => {
            let tol = ratio(DECIMAL_CELL_TOLERANCE.0, DECIMAL_CELL_TOLERANCE.1);
            for (i, row) in TABLE2.iter().enumerate() {
                let r = i + 1;
                let v = view(&row.entries);
                let s = sigma_closed_form(&v).expect("7 entries");
                cells.push(exact_cell(r, "n", row.n, v.order(), RULE_N));
                cells.push(given_cell(r, "irr", row.irr.to_string(), RULE_IRR));
                cells.push(exact_cell(r, "sigma", row.sigma, s, RULE_SIGMA));
                let lambda = v.mean();
                let printed = parse_decimal(row.lambda).expect("printed decimal");
                let close = (&lambda - &printed).abs() <= tol;
                cells.push(CellReport {
                    row: r,
                    column: "lambda",
                    printed: row.lambda.to_string(),
                    recomputed: Some(format!(
                        "{} ({})",
                        decimal_string(&lambda),
                        fraction_string(&lambda)
                    )),
                    status: if close {
                        CellStatus::Match
                    } else {
                        CellStatus::Mismatch
                    },
                    rule: RULE_LAMBDA,
                });
                let computed = eta(&row.entries);
                cells.push(CellReport {
                    row: r,
                    column: "eta",
                    printed: row.eta.to_string(),
                    recomputed: Some(computed.to_string()),
                    status: if computed == row.eta {
                        CellStatus::Match
                    } else {
                        CellStatus::Mismatch
                    },
                    rule: RULE_ETA,
                });
                cells.push(given_cell(r, "eta1", row.eta1.to_string(), RULE_ETA1));
            }
        }
    }
    ReproductionReport { table, cells }
}

fn sequence_label(entries: &[u64]) -> String {
    let parts: Vec<String> = entries.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

/// The table exactly as printed: header and rows of strings.
pub fn table_rows(table: TableId) -> (Vec<&'static str>, Vec<Vec<String>>) {
    match table {
        TableId::One => (
            vec!["degree_sequence", "T1", "T2", "irr", "sigma"],
            TABLE1
                .iter()
                .map(|r| {
                    vec![
                        sequence_label(&r.entries),
                        r.t1.to_string(),
                        r.t2.to_string(),
                        r.irr.to_string(),
                        r.sigma.to_string(),
                    ]
                })
                .collect(),
        ),
        TableId::Two => (
            vec![
                "degree_sequence",
                "n",
                "irr",
                "sigma",
                "lambda",
                "eta",
                "eta1",
            ],
            TABLE2
                .iter()
                .map(|r| {
                    vec![
                        sequence_label(&r.entries),
                        r.n.to_string(),
                        r.irr.to_string(),
                        r.sigma.to_string(),
                        r.lambda.to_string(),
                        r.eta.to_string(),
                        r.eta1.to_string(),
                    ]
                })
                .collect(),
        ),
    }
}
