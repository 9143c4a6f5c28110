//! Exact evaluators for the theorem bounds.
//!
//! The two floors involving `N^{1/4}` are decided by integer comparisons only,
//! and each result carries a [`Certificate`] that can be replayed
//! independently: one comparison showing the value is attained, one showing
//! the next integer is not. The cubic bounds are exact quarters.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::arith::{cmp_mul_sqrt, iroot4, iroot4_u128, pow4};
use crate::error::{Error, Result};

/// One integer comparison `lhs ≤ rhs` used to decide a floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Comparison {
    /// `a·√n` against `b`.
    MulSqrt { a: u128, b: u128, n: u128 },
    /// `base⁴` against `rhs`.
    FourthPower { base: u128, rhs: u128 },
}

impl Comparison {
    /// Ordering of the left side against the right side.
    pub fn evaluate(&self) -> Result<Ordering> {
        match *self {
            Comparison::MulSqrt { a, b, n } => cmp_mul_sqrt(a, b, n),
            Comparison::FourthPower { base, rhs } => {
                Ok(pow4(base).map_or(Ordering::Greater, |p| p.cmp(&rhs)))
            }
        }
    }

    pub fn is_le(&self) -> Result<bool> {
        Ok(self.evaluate()? != Ordering::Greater)
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::MulSqrt { a, b, n } => write!(f, "{a}·√{n} vs {b}"),
            Comparison::FourthPower { base, rhs } => write!(f, "{base}^4 vs {rhs}"),
        }
    }
}

/// Proof that `value` is a floor: `holds` is `≤`, `fails` (for `value + 1`) is `>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub holds: Comparison,
    pub fails: Comparison,
}

impl Certificate {
    /// Re-evaluates both comparisons.
    pub fn replay(&self) -> Result<bool> {
        Ok(self.holds.is_le()? && !self.fails.is_le()?)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}: <=] [{}: >]", self.holds, self.fails)
    }
}

/// An integer bound decided without floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactBound {
    pub value: u64,
    pub certificate: Certificate,
}

/// `numerator / denominator`, kept unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RationalBound {
    pub numerator: i128,
    pub denominator: u32,
}

impl RationalBound {
    pub fn quarter(numerator: i128) -> Self {
        RationalBound {
            numerator,
            denominator: 4,
        }
    }

    /// Ordering of the integer `x` against the bound, by cross-multiplication.
    pub fn cmp_integer(&self, x: u64) -> Ordering {
        (x as i128 * self.denominator as i128).cmp(&self.numerator)
    }

    /// True when `x ≤ bound`.
    pub fn admits(&self, x: u64) -> bool {
        self.cmp_integer(x) != Ordering::Greater
    }

    pub fn is_integer(&self) -> bool {
        self.numerator % self.denominator as i128 == 0
    }
}

impl fmt::Display for RationalBound {
    /// Exact decimal when the denominator divides 100, `p/q` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator as i128;
        if 100 % den != 0 {
            return write!(f, "{}/{}", self.numerator, den);
        }
        let sign = if self.numerator < 0 { "-" } else { "" };
        let abs = self.numerator.unsigned_abs();
        let (whole, rem) = (abs / den as u128, abs % den as u128);
        if rem == 0 {
            return write!(f, "{sign}{whole}");
        }
        let cents = format!("{:02}", rem * (100 / den as u128));
        write!(f, "{sign}{whole}.{}", cents.trim_end_matches('0'))
    }
}

/// `m ≤ 2N^{1/4} + 1/(2N^{1/4} − 1)` ⟺ `4(m+1)(m−1)·√N ≤ 16N + (m+1)²` for `m ≥ 1`.
fn thm2_comparison(m: u64, n: u64) -> Comparison {
    let m = m as u128;
    Comparison::MulSqrt {
        a: 4 * (m * m - 1),
        b: 16 * n as u128 + (m + 1) * (m + 1),
        n: n as u128,
    }
}

/// `⌊2N^{1/4} + 1/(2N^{1/4} − 1)⌋` for `N ≥ 2`.
pub fn thm2_bound(n: u64) -> Result<ExactBound> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "thm2_bound: N must be at least 2, got {n}"
        )));
    }
    let r = iroot4(n);
    // 2r ≤ 2N^{1/4} < 2r + 2 and the correction term is below 1 for N ≥ 2
    let lo = (2 * r).saturating_sub(2).max(1);
    let hi = 2 * r + 3;
    let mut value = None;
    for m in (lo..=hi).rev() {
        if thm2_comparison(m, n).is_le()? {
            value = Some(m);
            break;
        }
    }
    let value = value.ok_or_else(|| {
        Error::Invariant(format!(
            "thm2_bound: no candidate in [{lo}, {hi}] for N = {n}"
        ))
    })?;
    let certificate = Certificate {
        holds: thm2_comparison(value, n),
        fails: thm2_comparison(value + 1, n),
    };
    if !certificate.replay()? {
        return Err(Error::Invariant(format!(
            "thm2_bound: certificate does not replay for N = {n}"
        )));
    }
    Ok(ExactBound { value, certificate })
}

/// `⌊2√2·N^{1/4} + 1/2⌋`: the largest `m` with `(2m − 1)⁴ ≤ 1024·N`.
pub fn thm3_bound(n: u64) -> Result<ExactBound> {
    if n == 0 {
        return Err(Error::Domain("thm3_bound: N must be positive".into()));
    }
    let rhs = 1024 * n as u128;
    let root = iroot4_u128(rhs);
    // the largest odd integer not above root is 2m − 1
    let value = root.div_ceil(2) as u64;
    let base = 2 * value as u128 - 1;
    // 1024·N is even and base⁴ odd, so the comparison is always strict
    debug_assert_ne!(pow4(base), Some(rhs));
    let certificate = Certificate {
        holds: Comparison::FourthPower { base, rhs },
        fails: Comparison::FourthPower {
            base: base + 2,
            rhs,
        },
    };
    if !certificate.replay()? {
        return Err(Error::Invariant(format!(
            "thm3_bound: certificate does not replay for N = {n}"
        )));
    }
    Ok(ExactBound { value, certificate })
}

/// `a2(a2 − 3)(a2 + 1)/4`.
pub fn thm1_bound(a2: u64) -> Result<RationalBound> {
    let x = a2 as i128;
    x.checked_mul(x - 3)
        .and_then(|v| v.checked_mul(x + 1))
        .map(RationalBound::quarter)
        .ok_or(Error::Overflow("thm1_bound"))
}

/// `m(m − 1)²/4`.
pub fn thm05_bound(m: u64) -> Result<RationalBound> {
    let x = m as i128;
    (x - 1)
        .checked_mul(x - 1)
        .and_then(|v| v.checked_mul(x))
        .map(RationalBound::quarter)
        .ok_or(Error::Overflow("thm05_bound"))
}
