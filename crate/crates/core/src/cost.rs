//! Integer cost arithmetic in units of `1/a` and exact rational thresholds.

use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};

/// Exact nonnegative rational number.
pub type Rational = Ratio<u64>;

/// A cost expressed as `units / weight_a`.
///
/// An indel contributes `weight_a` units and a substitution contributes one
/// unit, so every alignment cost is an integer number of units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScaledCost {
    pub units: u64,
    pub weight_a: u64,
}

impl ScaledCost {
    pub fn new(units: u64, weight_a: u64) -> Self {
        assert!(weight_a > 0, "weight_a must be positive");
        ScaledCost { units, weight_a }
    }

    pub fn zero(weight_a: u64) -> Self {
        Self::new(0, weight_a)
    }

    pub fn indel(weight_a: u64) -> Self {
        Self::new(weight_a, weight_a)
    }

    pub fn substitution(weight_a: u64) -> Self {
        Self::new(1, weight_a)
    }

    /// The real cost `units / weight_a` as an exact fraction.
    pub fn value(&self) -> Rational {
        Ratio::new(self.units, self.weight_a)
    }

    pub fn as_f64(&self) -> f64 {
        self.units as f64 / self.weight_a as f64
    }
}

impl fmt::Display for ScaledCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.value();
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

/// Adds two costs measured with the same `a`, failing on overflow.
pub fn cost_add(x: ScaledCost, y: ScaledCost) -> Result<ScaledCost> {
    if x.weight_a != y.weight_a {
        return contract(format!(
            "cost_add with weight_a {} and {}",
            x.weight_a, y.weight_a
        ));
    }
    let units = x
        .units
        .checked_add(y.units)
        .ok_or(Error::Overflow("cost_add"))?;
    Ok(ScaledCost::new(units, x.weight_a))
}

/// A distance bound `k` together with its floor on the `1/a` grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    pub value: Rational,
    pub weight_a: u64,
    /// `floor(weight_a * value)`.
    pub scaled_units: u64,
}

impl Threshold {
    pub fn new(value: Rational, weight_a: u64) -> Result<Self> {
        if weight_a == 0 {
            return contract("weight_a must be positive");
        }
        let scaled = floor_mul(value, weight_a).ok_or(Error::Overflow("threshold scaling"))?;
        Ok(Threshold { value, weight_a, scaled_units: scaled })
    }

    /// Threshold `units / a`, i.e. exactly a point of the cost grid.
    pub fn from_units(units: u64, weight_a: u64) -> Self {
        Threshold {
            value: Ratio::new(units, weight_a),
            weight_a,
            scaled_units: units,
        }
    }

    pub fn integer(k: u64, weight_a: u64) -> Result<Self> {
        Self::new(Ratio::from_integer(k), weight_a)
    }

    /// Whether a cost is at most this threshold (exact rational comparison).
    pub fn admits(&self, c: ScaledCost) -> bool {
        c.value() <= self.value
    }

    /// `floor(k)`, the largest whole number of indels within the bound.
    pub fn floor(&self) -> u64 {
        self.value.to_integer()
    }

    /// `ceil(k)`.
    pub fn ceil(&self) -> u64 {
        self.value.ceil().to_integer()
    }

    pub fn as_f64(&self) -> f64 {
        ratio_f64(self.value)
    }
}

/// `floor(r * m)` computed without rounding error.
pub fn floor_mul(r: Rational, m: u64) -> Option<u64> {
    let n = (*r.numer() as u128).checked_mul(m as u128)?;
    u64::try_from(n / *r.denom() as u128).ok()
}

/// `ceil(r * m)` computed without rounding error.
pub fn ceil_mul(r: Rational, m: u64) -> Option<u64> {
    let n = (*r.numer() as u128).checked_mul(m as u128)?;
    let d = *r.denom() as u128;
    u64::try_from(n.div_ceil(d)).ok()
}

pub fn ratio_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"0.25"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    let (int, frac) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let numer: u64 = digits.parse().map_err(|_| bad())?;
    let denom = 10u64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
    Ok(Ratio::new(numer, denom))
}
