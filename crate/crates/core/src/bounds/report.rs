use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::catalog::BoundId;
use crate::rational::{decimal_string, fraction_string, Interval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Eq => "=",
        }
    }

    /// Margin oriented so that a non-negative (strict: positive) value means
    /// the relation holds: `rhs - lhs` for `<=`, `<`, `=`; `lhs - rhs` for
    /// `>=`, `>`.
    pub fn margin(self, lhs: &Interval, rhs: &Interval) -> Interval {
        match self {
            Relation::Le | Relation::Lt | Relation::Eq => rhs.sub(lhs),
            Relation::Ge | Relation::Gt => lhs.sub(rhs),
        }
    }

    /// Decide the relation from an enclosure of the margin.
    pub fn decide(self, margin: &Interval) -> Verdict {
        let (lo, hi) = (&margin.lo, &margin.hi);
        match self {
            Relation::Le | Relation::Ge => {
                if !lo.is_negative() {
                    Verdict::Holds
                } else if hi.is_negative() {
                    Verdict::Violated
                } else {
                    Verdict::Indeterminate
                }
            }
            Relation::Lt | Relation::Gt => {
                if lo.is_positive() {
                    Verdict::Holds
                } else if !hi.is_positive() {
                    Verdict::Violated
                } else {
                    Verdict::Indeterminate
                }
            }
            Relation::Eq => {
                if margin.is_exact() && lo.is_zero() {
                    Verdict::Holds
                } else if !margin.contains_zero() {
                    Verdict::Violated
                } else {
                    Verdict::Indeterminate
                }
            }
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Violated,
    /// Root enclosures did not separate the two sides even after one
    /// precision escalation.
    Indeterminate,
    /// A side could not be evaluated (a gated division by zero).
    Undefined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "true",
            Verdict::Violated => "false",
            Verdict::Indeterminate => "indeterminate_at_precision",
            Verdict::Undefined => "undefined",
        }
    }

    pub fn holds(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Violated => Some(false),
            _ => None,
        }
    }
}

/// Result of evaluating one catalogued claim on one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub input: String,
    pub hypotheses_met: bool,
    pub failed_hypotheses: Vec<String>,
    pub lhs: Option<Interval>,
    pub rhs: Option<Interval>,
    pub relation: Relation,
    pub verdict: Verdict,
    pub margin: Option<Interval>,
    pub params: String,
    pub notes: Vec<String>,
}

pub const CSV_HEADER: [&str; 8] = [
    "bound_id",
    "hypotheses_met",
    "lhs",
    "rhs",
    "relation",
    "holds",
    "margin",
    "params",
];

/// Exact values render as `num/den`; root enclosures as a 12-significant
/// digit decimal of their midpoint.
pub fn value_string(v: &Option<Interval>) -> String {
    match v {
        None => String::new(),
        Some(iv) if iv.is_exact() => fraction_string(&iv.lo),
        Some(iv) => decimal_string(&iv.midpoint()),
    }
}

fn value_json(v: &Option<Interval>) -> Value {
    match v {
        None => Value::Null,
        Some(iv) => json!({
            "value": value_string(v),
            "decimal": decimal_string(&iv.midpoint()),
            "exact": iv.is_exact(),
            "lo": fraction_string(&iv.lo),
            "hi": fraction_string(&iv.hi),
        }),
    }
}

impl BoundReport {
    pub fn holds(&self) -> Option<bool> {
        self.verdict.holds()
    }

    /// Hypotheses met and a definite verdict.
    pub fn is_probative(&self) -> bool {
        self.hypotheses_met && self.holds().is_some()
    }

    pub fn is_counterexample(&self) -> bool {
        self.hypotheses_met && self.verdict == Verdict::Violated
    }

    pub fn csv_record(&self) -> [String; 8] {
        [
            self.bound_id.to_string(),
            self.hypotheses_met.to_string(),
            value_string(&self.lhs),
            value_string(&self.rhs),
            self.relation.to_string(),
            self.verdict.as_str().to_string(),
            value_string(&self.margin),
            self.params.clone(),
        ]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "bound_id": self.bound_id.to_string(),
            "input": self.input,
            "hypotheses_met": self.hypotheses_met,
            "failed_hypotheses": self.failed_hypotheses,
            "lhs": value_json(&self.lhs),
            "rhs": value_json(&self.rhs),
            "relation": self.relation.symbol(),
            "holds": self.verdict.as_str(),
            "margin": value_json(&self.margin),
            "params": self.params,
            "notes": self.notes,
        })
    }
}

/// Write reports as CSV with the fixed column order.
pub fn write_csv<W: std::io::Write>(reports: &[BoundReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(reports: &[BoundReport]) -> String {
    let mut buf = Vec::new();
    write_csv(reports, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}
