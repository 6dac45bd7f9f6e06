use nalgebra::{DMatrix, DVector};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{sig12, to_f64, uint, Q};

/// Ordinary least squares with an intercept.
#[derive(Clone, Debug, PartialEq)]
pub struct OlsFit {
    pub feature_names: Vec<String>,
    pub coefficients: Vec<f64>,
    pub intercept: f64,
    pub r_squared: f64,
    pub rank: usize,
    pub rank_deficient: bool,
    /// Ratio of extreme singular values of the centered design; infinite
    /// when the smallest is zero.
    pub condition_number: f64,
    pub singular_values: Vec<f64>,
}

/// Fit `target ~ features` where `features[j]` is the j-th column.
///
/// Columns are centered in exact arithmetic, then solved through the SVD
/// pseudo-inverse, so a rank-deficient design yields the minimum-norm
/// coefficient vector and is flagged.
pub fn ols_fit(names: &[&str], features: &[Vec<Q>], target: &[Q]) -> Result<OlsFit> {
    let rows = target.len();
    let cols = features.len();
    if rows == 0 || cols == 0 {
        return Err(Error::domain(
            "regression needs at least one row and one feature",
        ));
    }
    if names.len() != cols {
        return Err(Error::domain("one name per feature column is required"));
    }
    if features.iter().any(|f| f.len() != rows) {
        return Err(Error::domain(
            "feature columns must match the target length",
        ));
    }
    if rows < cols + 1 {
        return Err(Error::domain(format!(
            "need at least {} rows for {cols} features, got {rows}",
            cols + 1
        )));
    }
    let mean = |v: &[Q]| v.iter().fold(Q::zero(), |a, x| a + x) / uint(rows as u64);
    let x_means: Vec<Q> = features.iter().map(|f| mean(f)).collect();
    let y_mean = mean(target);

    let x = DMatrix::from_fn(rows, cols, |i, j| to_f64(&(&features[j][i] - &x_means[j])));
    let y = DVector::from_fn(rows, |i, _| to_f64(&(&target[i] - &y_mean)));

    let svd = x.clone().svd(true, true);
    let singular: Vec<f64> = svd.singular_values.iter().copied().collect();
    let largest = singular.iter().copied().fold(0.0, f64::max);
    let cutoff = largest * rows.max(cols) as f64 * f64::EPSILON;
    let rank = singular.iter().filter(|&&s| s > cutoff).count();
    let smallest = singular.iter().copied().fold(f64::INFINITY, f64::min);
    let condition_number = if smallest > 0.0 {
        largest / smallest
    } else {
        f64::INFINITY
    };
    let beta = svd
        .solve(&y, cutoff)
        .map_err(|e| Error::domain(format!("least-squares solve failed: {e}")))?;

    let coefficients: Vec<f64> = beta.iter().copied().collect();
    let intercept = to_f64(&y_mean)
        - coefficients
            .iter()
            .zip(&x_means)
            .map(|(b, m)| b * to_f64(m))
            .sum::<f64>();
    let residual = &y - &x * &beta;
    let sse = residual.norm_squared();
    let sst = y.norm_squared();
    let r_squared = if sst > 0.0 { 1.0 - sse / sst } else { 1.0 };

    Ok(OlsFit {
        feature_names: names.iter().map(|s| s.to_string()).collect(),
        coefficients,
        intercept,
        r_squared,
        rank,
        rank_deficient: rank < cols,
        condition_number,
        singular_values: singular,
    })
}

impl OlsFit {
    pub fn predict(&self, point: &[f64]) -> Result<f64> {
        predict_linear(&self.coefficients, self.intercept, point)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "features": self.feature_names,
            "coefficients": self.coefficients.iter().map(|&c| sig12(c)).collect::<Vec<_>>(),
            "intercept": sig12(self.intercept),
            "r_squared": sig12(self.r_squared),
            "rank": self.rank,
            "rank_deficient": self.rank_deficient,
            "condition_number": sig12(self.condition_number),
            "singular_values": self.singular_values.iter().map(|&s| sig12(s)).collect::<Vec<_>>(),
        })
    }
}

/// `intercept + coefficients · point`.
pub fn predict_linear(coefficients: &[f64], intercept: f64, point: &[f64]) -> Result<f64> {
    if point.len() != coefficients.len() {
        return Err(Error::domain(format!(
            "prediction point has {} coordinates, the model has {} features",
            point.len(),
            coefficients.len()
        )));
    }
    Ok(intercept
        + coefficients
            .iter()
            .zip(point)
            .map(|(b, x)| b * x)
            .sum::<f64>())
}
