use serde_json::{json, Value};

use crate::error::Result;
use crate::rational::{parse_decimal, round_places, sig12, to_f64, uint, Q};
use crate::sequences::{Convention, DegreeSequenceView};

use super::correlation::{correlation_matrix, Column, CorrelationMatrix, EntryComparison};
use super::regression::{ols_fit, predict_linear, OlsFit};
use super::tables::{TableId, TABLE1, TABLE2};

/// Per-entry tolerance against the printed correlation matrices.
pub const MATRIX_TOLERANCE: f64 = 5e-3;
/// Tolerance on the printed R².
pub const R_SQUARED_TOLERANCE: f64 = 0.02;

pub const PRINTED_MATRIX_1: [[f64; 5]; 5] = [
    [1.000000, 0.929672, 0.974594, 0.999999, 0.894803],
    [0.929672, 1.000000, 0.987695, 0.929695, 0.993202],
    [0.974594, 0.987695, 1.000000, 0.974594, 0.966635],
    [0.999999, 0.929695, 0.974594, 1.000000, 0.894845],
    [0.894803, 0.993202, 0.966635, 0.894845, 1.000000],
];

pub const PRINTED_MATRIX_2: [[f64; 5]; 5] = [
    [1.00000, 0.998777, 0.314881, 0.969896, 0.990360],
    [0.998777, 1.00000, 0.282990, 0.957017, 0.982405],
    [0.314881, 0.282990, 1.00000, 0.497029, 0.415811],
    [0.969896, 0.957017, 0.497029, 1.00000, 0.994206],
    [0.990360, 0.982405, 0.415811, 0.994206, 1.00000],
];

/// A regression summary as printed next to a table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrintedRegression {
    pub coefficients: [&'static str; 2],
    pub intercept: &'static str,
    pub r_squared: &'static str,
    pub query: [f64; 2],
    pub prediction: &'static str,
}

pub const PRINTED_REGRESSION_1: PrintedRegression = PrintedRegression {
    coefficients: ["-94764.10761811", "27387.84112146"],
    intercept: "-506577.67445476603",
    r_squared: "0.864810869832136",
    query: [350.0, 50.0],
    prediction: "-32304623.284719232",
};

pub const PRINTED_REGRESSION_2: PrintedRegression = PrintedRegression {
    coefficients: ["-1402.91893491", "72.8168638"],
    intercept: "53643.804983904585",
    r_squared: "0.9997469414194662",
    query: [400.0, 200.0],
    prediction: "-492960.5317043649",
};

impl PrintedRegression {
    pub fn of(table: TableId) -> Self {
        match table {
            TableId::One => PRINTED_REGRESSION_1,
            TableId::Two => PRINTED_REGRESSION_2,
        }
    }

    fn number(s: &str) -> f64 {
        to_f64(&parse_decimal(s).expect("printed decimal"))
    }

    pub fn coefficient_values(&self) -> [f64; 2] {
        self.coefficients.map(Self::number)
    }

    pub fn intercept_value(&self) -> f64 {
        Self::number(self.intercept)
    }

    pub fn r_squared_value(&self) -> f64 {
        Self::number(self.r_squared)
    }

    pub fn prediction_value(&self) -> f64 {
        Self::number(self.prediction)
    }

    /// The printed coefficients applied to the printed query point.
    pub fn recomputed_prediction(&self) -> f64 {
        predict_linear(
            &self.coefficient_values(),
            self.intercept_value(),
            &self.query,
        )
        .expect("two coordinates")
    }
}

fn view(entries: &[u64]) -> DegreeSequenceView {
    DegreeSequenceView::new(entries.to_vec(), Convention::PaperTable).expect("table rows are valid")
}

/// Columns (n, σ, irr, T1, T2) of the first table; printed values, with
/// n = Σ entries.
pub fn table1_columns() -> Vec<Column> {
    let n: Vec<u64> = TABLE1.iter().map(|r| view(&r.entries).order()).collect();
    vec![
        Column::from_u64("n", &n),
        Column::from_u64("sigma", &TABLE1.map(|r| r.sigma)),
        Column::from_u64("irr", &TABLE1.map(|r| r.irr)),
        Column::from_u64("T1", &TABLE1.map(|r| r.t1)),
        Column::from_u64("T2", &TABLE1.map(|r| r.t2)),
    ]
}

/// Columns (n, η, η₁, σ, irr) of the second table, all as printed.
pub fn table2_columns() -> Vec<Column> {
    let eta1 = TABLE2
        .iter()
        .map(|r| parse_decimal(r.eta1).expect("printed decimal"))
        .collect();
    vec![
        Column::from_u64("n", &TABLE2.map(|r| r.n)),
        Column::new("eta", TABLE2.iter().map(|r| uint(r.eta as u64)).collect()),
        Column::new("eta1", eta1),
        Column::from_u64("sigma", &TABLE2.map(|r| r.sigma)),
        Column::from_u64("irr", &TABLE2.map(|r| r.irr)),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationReproduction {
    pub table: TableId,
    pub matrix: CorrelationMatrix,
    pub comparisons: Vec<EntryComparison>,
}

impl CorrelationReproduction {
    pub fn deviations(&self) -> impl Iterator<Item = &EntryComparison> {
        self.comparisons.iter().filter(|c| !c.within)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "table": self.table.number(),
            "correlation": self.matrix.to_json(),
            "tolerance": sig12(MATRIX_TOLERANCE),
            "comparison": self.comparisons.iter().map(EntryComparison::to_json).collect::<Vec<_>>(),
            "deviations": self.deviations().count(),
        })
    }
}

pub fn reproduce_correlation(table: TableId) -> Result<CorrelationReproduction> {
    let (columns, printed) = match table {
        TableId::One => (table1_columns(), PRINTED_MATRIX_1),
        TableId::Two => (table2_columns(), PRINTED_MATRIX_2),
    };
    let matrix = correlation_matrix(&columns)?;
    let printed: Vec<Vec<f64>> = printed.iter().map(|r| r.to_vec()).collect();
    let comparisons = matrix.compare(&printed, MATRIX_TOLERANCE)?;
    Ok(CorrelationReproduction {
        table,
        matrix,
        comparisons,
    })
}

/// One least-squares fit compared with the printed summary.
#[derive(Clone, Debug, PartialEq)]
pub struct RegressionAttempt {
    pub label: &'static str,
    pub fit: OlsFit,
    pub printed_r_squared: f64,
    pub r_squared_matches: bool,
    /// |fit − printed| per coefficient.
    pub coefficient_diffs: Vec<f64>,
}

impl RegressionAttempt {
    pub fn to_json(&self) -> Value {
        json!({
            "model": self.label,
            "fit": self.fit.to_json(),
            "printed_r_squared": sig12(self.printed_r_squared),
            "r_squared_tolerance": sig12(R_SQUARED_TOLERANCE),
            "r_squared_matches": self.r_squared_matches,
            "coefficient_abs_diffs": self.coefficient_diffs.iter().map(|&d| sig12(d)).collect::<Vec<_>>(),
        })
    }
}

fn attempt(
    label: &'static str,
    names: &[&str],
    features: &[Vec<Q>],
    target: &[Q],
    printed: &PrintedRegression,
) -> Result<RegressionAttempt> {
    let fit = ols_fit(names, features, target)?;
    let pr2 = printed.r_squared_value();
    let coefficient_diffs = fit
        .coefficients
        .iter()
        .zip(printed.coefficient_values())
        .map(|(a, b)| (a - b).abs())
        .collect();
    Ok(RegressionAttempt {
        label,
        r_squared_matches: (fit.r_squared - pr2).abs() <= R_SQUARED_TOLERANCE,
        printed_r_squared: pr2,
        coefficient_diffs,
        fit,
    })
}

/// Fits tried against each printed regression.
///
/// First table: σ ~ (n, λ_𝒟) with exact λ_𝒟 (collinear, since λ = n/7)
/// and with λ_𝒟 rounded to two decimals. Second table: σ ~ (n, irr).
pub fn reproduce_regression(table: TableId) -> Result<Vec<RegressionAttempt>> {
    let printed = PrintedRegression::of(table);
    match table {
        TableId::One => {
            let views: Vec<_> = TABLE1.iter().map(|r| view(&r.entries)).collect();
            let n: Vec<Q> = views.iter().map(|v| uint(v.order())).collect();
            let lambda: Vec<Q> = views.iter().map(|v| v.mean()).collect();
            let rounded: Vec<Q> = lambda.iter().map(|l| round_places(l, 2)).collect();
            let sigma: Vec<Q> = TABLE1.iter().map(|r| uint(r.sigma)).collect();
            Ok(vec![
                attempt(
                    "sigma ~ n + lambda (exact)",
                    &["n", "lambda"],
                    &[n.clone(), lambda],
                    &sigma,
                    &printed,
                )?,
                attempt(
                    "sigma ~ n + lambda (2 decimals)",
                    &["n", "lambda_2dp"],
                    &[n, rounded],
                    &sigma,
                    &printed,
                )?,
            ])
        }
        TableId::Two => {
            let n: Vec<Q> = TABLE2.iter().map(|r| uint(r.n)).collect();
            let irr: Vec<Q> = TABLE2.iter().map(|r| uint(r.irr)).collect();
            let sigma: Vec<Q> = TABLE2.iter().map(|r| uint(r.sigma)).collect();
            Ok(vec![attempt(
                "sigma ~ n + irr",
                &["n", "irr"],
                &[n, irr],
                &sigma,
                &printed,
            )?])
        }
    }
}
