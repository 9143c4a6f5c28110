//! Exact integer primitives: floor roots, comparisons against `a·√n`, and the
//! solution stream of `x² − 2y² = 1`.
//!
//! Nothing here touches floating point. Squares and fourth powers of 63-bit
//! inputs are formed in `u128`; the one place that needs more room,
//! [`cmp_mul_sqrt`], compares 256-bit products built by [`wide_mul`].

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `N` accepted by the generators: every public `N` fits in 63 bits.
pub const MAX_N: u64 = i64::MAX as u64;

/// `⌊√n⌋`.
pub fn isqrt(n: u64) -> u64 {
    isqrt_u128(n as u128) as u64
}

/// `⌊√n⌋` for 128-bit arguments.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // 2^⌈bits/2⌉ is above the root, so Newton decreases monotonically to the floor.
    let bits = 128 - n.leading_zeros();
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// `⌊n^{1/4}⌋`.
pub fn iroot4(n: u64) -> u64 {
    iroot4_u128(n as u128) as u64
}

/// `⌊n^{1/4}⌋` for 128-bit arguments.
pub fn iroot4_u128(n: u128) -> u128 {
    // ⌊√⌊√n⌋⌋ = ⌊n^{1/4}⌋; the loops below re-verify by multiplication.
    let mut r = isqrt_u128(isqrt_u128(n));
    while pow4(r).is_none_or(|p| p > n) {
        r -= 1;
    }
    while pow4(r + 1).is_some_and(|p| p <= n) {
        r += 1;
    }
    r
}

/// `x⁴`, or `None` when it does not fit in `u128`.
pub fn pow4(x: u128) -> Option<u128> {
    x.checked_mul(x).and_then(|sq| sq.checked_mul(sq))
}

/// Full 256-bit product of two `u128` values as `(high, low)`.
pub fn wide_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a0, a1) = (a & MASK, a >> 64);
    let (b0, b1) = (b & MASK, b >> 64);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let lo = (p00 & MASK) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// Sign of `a·√n − b`, decided by comparing `a²·n` with `b²`.
///
/// `a²` must fit in 128 bits; the products themselves are compared at 256
/// bits. Fails with [`Error::Overflow`] only when `a ≥ 2^64`.
pub fn cmp_mul_sqrt(a: u128, b: u128, n: u128) -> Result<Ordering> {
    let a_sq = a
        .checked_mul(a)
        .ok_or(Error::Overflow("cmp_mul_sqrt: a² exceeds 128 bits"))?;
    Ok(wide_mul(a_sq, n).cmp(&wide_mul(b, b)))
}

/// One solution of `x² − 2y² = 1`, namely `x + y√2 = (3 + 2√2)^index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PellSolution {
    pub index: u32,
    pub x: u64,
    pub y: u64,
}

impl PellSolution {
    pub const FUNDAMENTAL: PellSolution = PellSolution {
        index: 1,
        x: 3,
        y: 2,
    };

    /// Checks `x² − 2y² = 1` exactly.
    pub fn is_valid(&self) -> bool {
        let x = self.x as u128;
        let y = self.y as u128;
        x * x == 2 * y * y + 1
    }

    /// `(x, y) ↦ (3x + 4y, 2x + 3y)`, or `None` once a coordinate leaves `u64`.
    pub fn next(&self) -> Option<PellSolution> {
        let x = self.x.checked_mul(3)?.checked_add(self.y.checked_mul(4)?)?;
        let y = self.x.checked_mul(2)?.checked_add(self.y.checked_mul(3)?)?;
        Some(PellSolution {
            index: self.index + 1,
            x,
            y,
        })
    }
}

/// Iterator over all Pell solutions that fit in 64 bits.
#[derive(Debug, Clone)]
pub struct PellSolutions {
    next: Option<PellSolution>,
}

impl Default for PellSolutions {
    fn default() -> Self {
        PellSolutions {
            next: Some(PellSolution::FUNDAMENTAL),
        }
    }
}

impl Iterator for PellSolutions {
    type Item = PellSolution;

    fn next(&mut self) -> Option<PellSolution> {
        let current = self.next?;
        self.next = current.next();
        Some(current)
    }
}

/// The first `count` solutions of `x² − 2y² = 1`.
pub fn pell_solutions(count: usize) -> Result<Vec<PellSolution>> {
    if count == 0 {
        return Err(Error::Domain(
            "pell_solutions: count must be at least 1".into(),
        ));
    }
    let out: Vec<PellSolution> = PellSolutions::default().take(count).collect();
    if out.len() < count {
        let last_valid = out.last().map_or(0, |s| s.index);
        return Err(Error::IndexOverflow {
            what: "pell_solutions",
            last_valid,
        });
    }
    Ok(out)
}
