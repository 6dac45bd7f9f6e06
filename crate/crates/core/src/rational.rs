//! Exact rational helpers and rigorous enclosures for square and n-th roots.
//!
//! Bound evaluation never touches floating point. Quantities involving
//! roots are carried as [`Interval`]s whose endpoints are dyadic rationals
//! bracketing the true value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn uint(v: u64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Q {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Q::from_integer(mag)
    } else {
        Q::new(BigInt::one(), mag)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `num/den` with a positive denominator, e.g. `336/5`; integers print
/// bare.
pub fn fraction_string(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `num/den` or a plain integer.
pub fn parse_fraction(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Exact value of a finite decimal literal such as `16.14` or `-3`.
pub fn parse_decimal(s: &str) -> Option<Q> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let q = Q::new(digits, den);
    Some(if neg { -q } else { q })
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Decimal rendering with at most 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}

pub fn decimal_string(q: &Q) -> String {
    sig12(to_f64(q))
}

/// Round to `places` decimal places, halves away from zero.
pub fn round_places(q: &Q, places: u32) -> Q {
    let scale = Q::from_integer(num_traits::pow(BigInt::from(10), places as usize));
    (q * &scale).round() / scale
}

/// A closed interval `[lo, hi]` of rationals; degenerate when exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn exact(q: Q) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / int(2)
    }

    /// Enclosure of `sqrt(x)` with `bits` fractional bits. `x` must be >= 0.
    pub fn sqrt(x: &Q, bits: u32) -> Self {
        assert!(!x.is_negative(), "square root of a negative rational");
        let scale = BigInt::one() << (2 * bits as usize);
        let scaled = (x.numer() * &scale) / x.denom();
        let root = scaled.sqrt();
        let den = BigInt::one() << bits as usize;
        let exact = &root * &root * x.denom() == x.numer() * &scale;
        let lo = Q::new(root.clone(), den.clone());
        if exact {
            Interval::exact(lo)
        } else {
            Interval {
                lo,
                hi: Q::new(root + 1, den),
            }
        }
    }

    /// Enclosure of the `k`-th root of a non-negative integer.
    pub fn nth_root(x: &BigInt, k: u32, bits: u32) -> Self {
        assert!(k > 0 && !x.is_negative());
        let scaled = x << (bits as usize * k as usize);
        let root = scaled.nth_root(k);
        let den = BigInt::one() << bits as usize;
        let lo = Q::new(root.clone(), den.clone());
        if num_traits::pow(root.clone(), k as usize) == scaled {
            Interval::exact(lo)
        } else {
            Interval {
                lo,
                hi: Q::new(root + 1, den),
            }
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn scale(&self, k: &Q) -> Interval {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Square of an interval contained in `[0, inf)`.
    pub fn square_nonneg(&self) -> Interval {
        debug_assert!(!self.lo.is_negative());
        Interval {
            lo: &self.lo * &self.lo,
            hi: &self.hi * &self.hi,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }
}

impl From<Q> for Interval {
    fn from(q: Q) -> Self {
        Interval::exact(q)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", fraction_string(&self.lo))
        } else {
            write!(
                f,
                "[{}, {}]",
                decimal_string(&self.lo),
                decimal_string(&self.hi)
            )
        }
    }
}
