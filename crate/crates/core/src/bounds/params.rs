use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{decimal_string, factorial, int, pow2, ratio, Q};

/// How the maximum-Sigma claim (B10) is gated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MaxSigmaGating {
    /// Only the requirement Δ >= 4 implicit in the claim itself.
    #[default]
    Statement,
    /// Additionally the constraint 4 <= Δ − 3 <= n/4 used in its proof.
    Strict,
}

/// Free parameters of the catalogue. `None` means "use the documented
/// default for this input".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundParams {
    /// Exponent in B2a; default ⌈log₂(Δ+1)⌉.
    pub alpha: Option<u32>,
    /// Exponent in B2b; default ⌈log₂(Δ+1)⌉.
    pub beta: Option<u32>,
    /// Prime in B9.
    pub p: u64,
    /// η; default ⌈2nΔ/m⌉.
    pub eta: Option<i64>,
    /// η₁ in (2, 4]; default min(4, max(2.01, 2ⁿ/(n−η)!)).
    pub eta1: Option<Q>,
    /// Multiplier t > 2. Only carried through for exploration; no catalogued
    /// claim depends on it.
    pub t: u64,
    pub max_sigma_gating: MaxSigmaGating,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams {
            alpha: None,
            beta: None,
            p: 2,
            eta: None,
            eta1: None,
            t: 3,
            max_sigma_gating: MaxSigmaGating::Statement,
        }
    }
}

impl BoundParams {
    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::domain(format!("p = {} is not prime", self.p)));
        }
        if let Some(e1) = &self.eta1 {
            if *e1 <= int(2) || *e1 > int(4) {
                return Err(Error::domain(format!(
                    "eta1 = {} must lie in (2, 4]",
                    decimal_string(e1)
                )));
            }
        }
        if self.t <= 2 {
            return Err(Error::domain(format!("t = {} must be > 2", self.t)));
        }
        Ok(())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Smallest `a` with 2^a >= x.
pub(crate) fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Parameters with every default filled in for a particular input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedParams {
    pub alpha: u32,
    pub beta: u32,
    pub p: u64,
    pub eta: Option<i64>,
    pub eta1: Q,
    pub eta1_note: Option<String>,
    pub t: u64,
    pub max_sigma_gating: MaxSigmaGating,
}

impl ResolvedParams {
    pub fn resolve(params: &BoundParams, n: u64, m: Option<u64>, max_degree: u64) -> Self {
        let default_exp = ceil_log2(max_degree + 1);
        let eta = params.eta.or_else(|| match m {
            Some(m) if m > 0 => {
                let num = 2 * n * max_degree;
                Some(num.div_ceil(m) as i64)
            }
            _ => None,
        });
        let (eta1, eta1_note) = match &params.eta1 {
            Some(v) => (v.clone(), None),
            None => default_eta1(n, eta),
        };
        ResolvedParams {
            alpha: params.alpha.unwrap_or(default_exp),
            beta: params.beta.unwrap_or(default_exp),
            p: params.p,
            eta,
            eta1,
            eta1_note,
            t: params.t,
            max_sigma_gating: params.max_sigma_gating,
        }
    }
}

/// 2ⁿ/(n−η)! clamped into [2.01, 4].
fn default_eta1(n: u64, eta: Option<i64>) -> (Q, Option<String>) {
    let lower = ratio(201, 100);
    let upper = int(4);
    let Some(eta) = eta else {
        return (upper, Some("eta undefined; eta1 set to 4".into()));
    };
    let gap = n as i64 - eta;
    if gap < 0 {
        return (
            upper,
            Some(format!(
                "2^n/(n-eta)! undefined for n-eta = {gap}; eta1 set to 4"
            )),
        );
    }
    let raw = pow2(n as i64) / Q::from_integer(factorial(gap as u64));
    if raw > upper {
        (
            upper,
            Some(format!(
                "2^n/(n-eta)! = {} clamped to 4",
                decimal_string(&raw)
            )),
        )
    } else if raw < lower {
        (
            lower,
            Some(format!(
                "2^n/(n-eta)! = {} clamped to 2.01",
                decimal_string(&raw)
            )),
        )
    } else {
        (raw, None)
    }
}

impl fmt::Display for ResolvedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eta = self
            .eta
            .map_or_else(|| "undefined".to_string(), |e| e.to_string());
        let eta1 = if self.eta1.denom().is_one() {
            self.eta1.numer().to_string()
        } else {
            decimal_string(&self.eta1)
        };
        write!(
            f,
            "alpha={};beta={};p={};eta={};eta1={};t={};b10={}",
            self.alpha,
            self.beta,
            self.p,
            eta,
            eta1,
            self.t,
            match self.max_sigma_gating {
                MaxSigmaGating::Statement => "statement",
                MaxSigmaGating::Strict => "strict",
            }
        )
    }
}
