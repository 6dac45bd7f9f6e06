use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{sig12, to_f64, uint, Q};

/// A named numeric column with exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub name: String,
    pub values: Vec<Q>,
}

impl Column {
    pub fn new(name: impl Into<String>, values: Vec<Q>) -> Self {
        Column {
            name: name.into(),
            values,
        }
    }

    pub fn from_u64(name: impl Into<String>, values: &[u64]) -> Self {
        Column::new(name, values.iter().map(|&v| uint(v)).collect())
    }
}

/// Pearson correlations. `None` marks a pair involving a constant column.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationMatrix {
    pub names: Vec<String>,
    pub values: Vec<Vec<Option<f64>>>,
}

/// Centered cross products are accumulated exactly; each coefficient costs a
/// single rounding of r² followed by a square root.
pub fn correlation_matrix(columns: &[Column]) -> Result<CorrelationMatrix> {
    if columns.len() < 2 {
        return Err(Error::domain("correlation needs at least 2 columns"));
    }
    let len = columns[0].values.len();
    if len < 3 {
        return Err(Error::domain("correlation needs columns of length >= 3"));
    }
    if let Some(c) = columns.iter().find(|c| c.values.len() != len) {
        return Err(Error::domain(format!(
            "column `{}` has {} values, expected {len}",
            c.name,
            c.values.len()
        )));
    }
    let centered: Vec<Vec<Q>> = columns
        .iter()
        .map(|c| {
            let mean = c.values.iter().fold(Q::zero(), |a, v| a + v) / uint(len as u64);
            c.values.iter().map(|v| v - &mean).collect()
        })
        .collect();
    let dot = |a: &[Q], b: &[Q]| a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y);
    let k = columns.len();
    let var: Vec<Q> = centered.iter().map(|c| dot(c, c)).collect();
    let mut values = vec![vec![None; k]; k];
    for i in 0..k {
        if !var[i].is_zero() {
            values[i][i] = Some(1.0);
        }
        for j in i + 1..k {
            if var[i].is_zero() || var[j].is_zero() {
                continue;
            }
            let cov = dot(&centered[i], &centered[j]);
            let r2 = &cov * &cov / (&var[i] * &var[j]);
            let r = to_f64(&r2).sqrt().min(1.0);
            let r = if cov.is_negative() { -r } else { r };
            values[i][j] = Some(r);
            values[j][i] = Some(r);
        }
    }
    Ok(CorrelationMatrix {
        names: columns.iter().map(|c| c.name.clone()).collect(),
        values,
    })
}

impl CorrelationMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        self.values[i][j]
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let k = self.names.len();
        (0..k).all(|i| {
            (0..k).all(|j| match (self.values[i][j], self.values[j][i]) {
                (Some(a), Some(b)) => (a - b).abs() <= tol,
                (None, None) => true,
                _ => false,
            })
        })
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.names.len()).all(|i| self.values[i][i].is_none_or(|v| v == 1.0))
    }

    /// Entry-by-entry comparison against a printed matrix in the same
    /// variable order.
    #[allow(clippy::needless_range_loop)]
    pub fn compare(&self, printed: &[Vec<f64>], tolerance: f64) -> Result<Vec<EntryComparison>> {
        let k = self.names.len();
        if printed.len() != k || printed.iter().any(|r| r.len() != k) {
            return Err(Error::domain(format!("printed matrix must be {k}x{k}")));
        }
        let mut out = Vec::new();
        for i in 0..k {
            for j in i..k {
                let computed = self.values[i][j];
                let diff = computed.map(|c| (c - printed[i][j]).abs());
                out.push(EntryComparison {
                    row: self.names[i].clone(),
                    col: self.names[j].clone(),
                    computed,
                    printed: printed[i][j],
                    abs_diff: diff,
                    within: diff.is_some_and(|d| d <= tolerance),
                });
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self
            .values
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        v.map_or(Value::String("undefined".into()), |x| {
                            Value::String(sig12(x))
                        })
                    })
                    .collect()
            })
            .collect();
        json!({ "variables": self.names, "matrix": rows })
    }
}

/// One upper-triangle entry of a matrix comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryComparison {
    pub row: String,
    pub col: String,
    pub computed: Option<f64>,
    pub printed: f64,
    pub abs_diff: Option<f64>,
    pub within: bool,
}

impl EntryComparison {
    pub fn to_json(&self) -> Value {
        json!({
            "row": self.row,
            "col": self.col,
            "computed": self.computed.map(sig12),
            "printed": sig12(self.printed),
            "abs_diff": self.abs_diff.map(sig12),
            "within_tolerance": self.within,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn col(name: &str, v: &[i64]) -> Column {
        Column::new(name, v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn perfect_and_anti_correlation() {
        let m = correlation_matrix(&[
            col("x", &[1, 2, 3, 4]),
            col("y", &[3, 5, 7, 9]),
            col("z", &[4, 3, 2, 1]),
        ])
        .unwrap();
        assert_eq!(m.get("x", "y"), Some(1.0));
        assert_eq!(m.get("x", "z"), Some(-1.0));
        assert!(m.is_symmetric(1e-12));
        assert!(m.has_unit_diagonal());
    }

    #[test]
    fn constant_column_is_undefined() {
        let m = correlation_matrix(&[col("x", &[1, 2, 3]), col("c", &[5, 5, 5])]).unwrap();
        assert_eq!(m.get("x", "c"), None);
        assert_eq!(m.get("c", "c"), None);
        assert_eq!(m.get("x", "x"), Some(1.0));
    }

    #[test]
    fn known_value() {
        // x = 1..5, y = (2,1,4,3,5): r = 0.8
        let m =
            correlation_matrix(&[col("x", &[1, 2, 3, 4, 5]), col("y", &[2, 1, 4, 3, 5])]).unwrap();
        assert!((m.get("x", "y").unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn shape_errors() {
        assert!(correlation_matrix(&[col("x", &[1, 2, 3])]).is_err());
        assert!(correlation_matrix(&[col("x", &[1, 2]), col("y", &[1, 2])]).is_err());
        assert!(correlation_matrix(&[col("x", &[1, 2, 3]), col("y", &[1, 2])]).is_err());
    }
}
