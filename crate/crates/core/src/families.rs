//! Explicit families of close factorizations.
//!
//! | family   | parameter | statistic                 | growth                 |
//! |----------|-----------|---------------------------|------------------------|
//! | `thm1`   | K ≥ 2     | `4A = a2(a2−3)(a2+1)`     | equality case          |
//! | `poly`   | K ≥ 1     | `max |x−y| = 2(K+1)`      | `2·N^{1/4}`, sharp     |
//! | `note`   | K ≥ 1     | `max |x−y| = 5K+1`        | `≈ 2.04124·N^{1/4}`    |
//! | `pell`   | n ≥ 2     | same-side `max = 2·y_n`   | `2√2·N^{1/4}`, sharp   |
//! | `remark` | K ≥ 3     | same-side `max = 5K−1`    | `≈ 2.5√2·N^{1/4}`      |
//!
//! Every generator re-verifies its output by multiplication before returning.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{PellSolutions, MAX_N};
use crate::error::{Error, Result};
pub use crate::lattice::PointTriple;
use crate::lattice::{CloseTriple, LatticePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Thm1,
    Poly,
    Note,
    Pell,
    Remark,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Thm1,
        FamilyKind::Poly,
        FamilyKind::Note,
        FamilyKind::Pell,
        FamilyKind::Remark,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Thm1 => "thm1",
            FamilyKind::Poly => "poly",
            FamilyKind::Note => "note",
            FamilyKind::Pell => "pell",
            FamilyKind::Remark => "remark",
        }
    }

    /// Size of the family's statistic relative to `N`.
    pub fn growth(&self) -> &'static str {
        match self {
            FamilyKind::Thm1 => "A = a2(a2-3)(a2+1)/4",
            FamilyKind::Poly => "2*N^(1/4)",
            FamilyKind::Note => "~2.04124*N^(1/4)",
            FamilyKind::Pell => "2*sqrt(2)*N^(1/4)",
            FamilyKind::Remark => "~2.5*sqrt(2)*N^(1/4)",
        }
    }

    pub fn min_parameter(&self) -> u64 {
        match self {
            FamilyKind::Thm1 | FamilyKind::Pell => 2,
            FamilyKind::Poly | FamilyKind::Note => 1,
            FamilyKind::Remark => 3,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown family '{s}' (expected thm1|poly|note|pell|remark)"
                ))
            })
    }
}

/// A generated value tagged with the family and parameter that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyMember<T> {
    pub kind: FamilyKind,
    pub parameter: u64,
    pub value: T,
}

fn require_min(kind: FamilyKind, parameter: u64) -> Result<()> {
    if parameter < kind.min_parameter() {
        return Err(Error::Domain(format!(
            "{kind} family needs parameter >= {}, got {parameter}",
            kind.min_parameter()
        )));
    }
    Ok(())
}

fn narrow(v: u128, what: &'static str) -> Result<u64> {
    u64::try_from(v)
        .ok()
        .filter(|&x| x <= MAX_N)
        .ok_or(Error::Overflow(what))
}

fn point_triple(n: u128, pts: [(u128, u128); 3], what: &'static str) -> Result<PointTriple> {
    let n = narrow(n, what)?;
    let mut points = [LatticePoint::new(0, 0); 3];
    for (slot, (x, y)) in points.iter_mut().zip(pts) {
        *slot = LatticePoint::new(narrow(x, what)?, narrow(y, what)?);
    }
    PointTriple::new(n, points)
}

/// Equality case of the `A ≤ a2(a2 − 3)(a2 + 1)/4` bound, with `a2 = 2K + 1`.
pub fn thm1_family(k: u64) -> Result<FamilyMember<CloseTriple>> {
    require_min(FamilyKind::Thm1, k)?;
    let kw = k as u128;
    let a = (2 * kw + 1)
        .checked_mul((kw + 1) * (kw - 1))
        .ok_or(Error::Overflow("thm1_family"))?;
    let b = (2 * kw - 1)
        .checked_mul(kw * kw)
        .ok_or(Error::Overflow("thm1_family"))?;
    let n = a.checked_mul(b).ok_or(Error::Overflow("thm1_family"))?;
    let n = narrow(n, "thm1_family")?;
    let value = CloseTriple::new(n, a as u64, b as u64, k + 1, k, 2 * k + 1, 2 * k - 1)?;
    Ok(FamilyMember {
        kind: FamilyKind::Thm1,
        parameter: k,
        value,
    })
}

/// `N = K(K+1)²(K+2)` with the three points nearest the center.
pub fn thm2_poly_family(k: u64) -> Result<FamilyMember<PointTriple>> {
    require_min(FamilyKind::Poly, k)?;
    let kw = k as u128;
    let (x1, y1) = (kw * (kw + 1), (kw + 1) * (kw + 2));
    let (x2, y2) = (kw * (kw + 2), (kw + 1) * (kw + 1));
    let n = x1
        .checked_mul(y1)
        .ok_or(Error::Overflow("thm2_poly_family"))?;
    let value = point_triple(n, [(x1, y1), (x2, y2), (y2, x2)], "thm2_poly_family")?;
    Ok(FamilyMember {
        kind: FamilyKind::Poly,
        parameter: k,
        value,
    })
}

/// The non-optimal polynomial construction with increments `2K + 1`, `2K`.
pub fn note_family(k: u64) -> Result<FamilyMember<PointTriple>> {
    require_min(FamilyKind::Note, k)?;
    let kw = k as u128;
    let x2 = 2 * kw * (3 * kw + 1);
    let y2 = 3 * kw * (2 * kw + 1);
    let x1 = x2 - 2 * kw;
    let y1 = (2 * kw + 1) * (3 * kw + 1);
    let n = x2.checked_mul(y2).ok_or(Error::Overflow("note_family"))?;
    let value = point_triple(n, [(x1, y1), (x2, y2), (y2, x2)], "note_family")?;
    Ok(FamilyMember {
        kind: FamilyKind::Note,
        parameter: k,
        value,
    })
}

fn pell_triple(index: u64) -> Result<Option<CloseTriple>> {
    let Some(sol) = PellSolutions::default().nth(index as usize - 1) else {
        return Ok(None);
    };
    let (x, y) = (sol.x as u128, sol.y as u128);
    let b1 = (x - 3) / 2;
    let a1 = (x - 1) / 2;
    let (a2, b2) = (y, y - 2);
    let b = b1 * (b1 + 3);
    let a = (b1 + 1) * (b1 + 2);
    let Some(n) = a.checked_mul(b).filter(|&n| n <= MAX_N as u128) else {
        return Ok(None);
    };
    CloseTriple::new(
        n as u64, a as u64, b as u64, a1 as u64, b1 as u64, a2 as u64, b2 as u64,
    )
    .map(Some)
}

/// Same-side sharp triple built from the `n`-th solution of `x² − 2y² = 1`.
///
/// `B = b1(b1 + 3)` and `A = (b1 + 1)(b1 + 2)` with `b1 = (x_n − 3)/2`; the
/// same-side maximum `|x − y|` is `2·y_n`.
pub fn pell_family(n: u64) -> Result<FamilyMember<CloseTriple>> {
    require_min(FamilyKind::Pell, n)?;
    if let Some(value) = pell_triple(n)? {
        return Ok(FamilyMember {
            kind: FamilyKind::Pell,
            parameter: n,
            value,
        });
    }
    let mut last_valid = 1;
    while pell_triple(last_valid as u64 + 1)?.is_some() {
        last_valid += 1;
    }
    Err(Error::IndexOverflow {
        what: "pell_family",
        last_valid,
    })
}

/// Polynomial same-side triple with `x1 = 2K² − 2`; `max |x − y| = 5K − 1`.
pub fn thm3_remark_family(k: u64) -> Result<FamilyMember<PointTriple>> {
    require_min(FamilyKind::Remark, k)?;
    let kw = k as u128;
    let pts = [
        (2 * (kw + 1) * (kw - 1), kw * (2 * kw - 1)),
        ((2 * kw - 1) * (kw + 1), 2 * kw * (kw - 1)),
        (2 * kw * (kw + 1), (2 * kw - 1) * (kw - 1)),
    ];
    let n = (2 * kw * (2 * kw - 1))
        .checked_mul(kw * kw - 1)
        .ok_or(Error::Overflow("thm3_remark_family"))?;
    let value = point_triple(n, pts, "thm3_remark_family")?;
    if !value.is_same_side() {
        return Err(Error::Invariant(format!(
            "remark family K = {k} is not strictly above the center"
        )));
    }
    Ok(FamilyMember {
        kind: FamilyKind::Remark,
        parameter: k,
        value,
    })
}
