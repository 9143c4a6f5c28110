//! Lattice points on `xy = N`, close-factorization triples, and the two
//! min-max statistics bounded by the L1-distance theorems.
//!
//! Most functions come in two shapes: a convenience form that factors `N` by
//! trial division, and a `*_from_lower` form that takes the ascending list of
//! divisors `d ≤ √N`. Range sweeps produce that list with a sieve.

use std::fmt;

use serde::Serialize;

use crate::arith::MAX_N;
use crate::error::{Error, Result};

/// A positive point `(x, y)` on the hyperbola `xy = N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticePoint {
    pub x: u64,
    pub y: u64,
}

impl LatticePoint {
    pub fn new(x: u64, y: u64) -> Self {
        LatticePoint { x, y }
    }

    /// `|x − y|`, which is also the L1 distance to `(√N, √N)`.
    pub fn abs_diff(&self) -> u64 {
        self.x.abs_diff(self.y)
    }

    pub fn mirror(&self) -> Self {
        LatticePoint {
            x: self.y,
            y: self.x,
        }
    }

    pub fn lies_on(&self, n: u64) -> bool {
        self.x as u128 * self.y as u128 == n as u128
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Three distinct lattice points on `xy = N` with their largest `|x − y|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PointTriple {
    pub n: u64,
    pub points: [LatticePoint; 3],
    pub max_diff: u64,
}

impl PointTriple {
    /// Verifies that every point lies on `xy = n` and that the points are distinct.
    pub fn new(n: u64, points: [LatticePoint; 3]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| !p.lies_on(n)) {
            return Err(Error::Invariant(format!("point {p} is not on xy = {n}")));
        }
        if points[0] == points[1] || points[0] == points[2] || points[1] == points[2] {
            return Err(Error::Invariant(format!(
                "repeated point in triple for N = {n}"
            )));
        }
        let max_diff = points.iter().map(LatticePoint::abs_diff).max().unwrap_or(0);
        Ok(PointTriple {
            n,
            points,
            max_diff,
        })
    }

    /// True when every point has `x > √N` strictly.
    pub fn is_same_side(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.x as u128 * p.x as u128 > self.n as u128)
    }
}

impl fmt::Display for PointTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = &self.points;
        write!(
            f,
            "N={}: {p}, {q}, {r}; max |x-y| = {}",
            self.n, self.max_diff
        )
    }
}

/// `N = A·B = (A + a1)(B − b1) = (A + a2)(B − b2)` with `a1 < a2`, `b1 < b2`.
///
/// The fields `a` and `b` hold `A` and `B`; `a1, b1, a2, b2` are the
/// increments. Values from [`CloseTriple::new`] are verified by multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CloseTriple {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "A")]
    pub a: u64,
    #[serde(rename = "B")]
    pub b: u64,
    pub a1: u64,
    pub b1: u64,
    pub a2: u64,
    pub b2: u64,
}

impl CloseTriple {
    pub fn new(n: u64, a: u64, b: u64, a1: u64, b1: u64, a2: u64, b2: u64) -> Result<Self> {
        let t = CloseTriple {
            n,
            a,
            b,
            a1,
            b1,
            a2,
            b2,
        };
        t.check()?;
        Ok(t)
    }

    /// Triple formed by three divisors `d1 < d2 < d3` of `n`, with `A = d1`.
    pub(crate) fn from_divisors(n: u64, d1: u64, d2: u64, d3: u64) -> Self {
        let b = n / d1;
        CloseTriple {
            n,
            a: d1,
            b,
            a1: d2 - d1,
            b1: b - n / d2,
            a2: d3 - d1,
            b2: b - n / d3,
        }
    }

    /// Re-checks every invariant by exact multiplication.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Invariant(format!("{what} for {self:?}")));
        let (n, a, b) = (self.n as u128, self.a as u128, self.b as u128);
        let (a1, b1, a2, b2) = (
            self.a1 as u128,
            self.b1 as u128,
            self.a2 as u128,
            self.b2 as u128,
        );
        if a == 0 || b == 0 || a1 == 0 || b1 == 0 {
            return fail("non-positive entry");
        }
        if a1 >= a2 || b1 >= b2 {
            return fail("increments not increasing");
        }
        if b2 >= b {
            return fail("B - b2 not positive");
        }
        if a * b != n || (a + a1) * (b - b1) != n || (a + a2) * (b - b2) != n {
            return fail("products differ from N");
        }
        for (ai, bi) in [(a1, b1), (a2, b2)] {
            // a_i·B − b_i·A = a_i·b_i, with the left side positive
            if ai * b <= bi * a || ai * b - bi * a != ai * bi {
                return fail("a_i B - b_i A != a_i b_i");
            }
        }
        if !self.lattice1_holds() {
            return fail("max(a2, b2)^3 <= 4 max(A, B)");
        }
        Ok(())
    }

    /// `max(a2, b2)³ > 4·max(A, B)`.
    pub fn lattice1_holds(&self) -> bool {
        let m = self.max_increment() as u128;
        let rhs = 4 * self.max_side() as u128;
        m.checked_mul(m)
            .and_then(|sq| sq.checked_mul(m))
            .is_none_or(|cube| cube > rhs)
    }

    pub fn max_increment(&self) -> u64 {
        self.a2.max(self.b2)
    }

    pub fn max_side(&self) -> u64 {
        self.a.max(self.b)
    }

    /// `D = a2·b1 − b2·a1`.
    pub fn det(&self) -> i128 {
        self.a2 as i128 * self.b1 as i128 - self.b2 as i128 * self.a1 as i128
    }

    /// `d1 = a1 − b1`.
    pub fn d1(&self) -> i128 {
        self.a1 as i128 - self.b1 as i128
    }

    /// `d2 = a2 − b2`.
    pub fn d2(&self) -> i128 {
        self.a2 as i128 - self.b2 as i128
    }

    /// `(A, B)`, `(A + a1, B − b1)`, `(A + a2, B − b2)`.
    pub fn points(&self) -> [LatticePoint; 3] {
        [
            LatticePoint::new(self.a, self.b),
            LatticePoint::new(self.a + self.a1, self.b - self.b1),
            LatticePoint::new(self.a + self.a2, self.b - self.b2),
        ]
    }

    /// True when `B ≤ √N ≤ A`.
    pub fn straddles_center(&self) -> bool {
        self.b <= self.a
    }
}

impl fmt::Display for CloseTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.points();
        write!(
            f,
            "{} = {}·{} = {}·{} = {}·{}",
            self.n, p.x, p.y, q.x, q.y, r.x, r.y
        )
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while n.is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3u64;
    while (p as u128) * (p as u128) <= n as u128 {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All divisors of `n` in ascending order, via trial-division factoring.
///
/// # Panics
/// When `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: N must be positive");
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Divisors `d` of `n` with `d² ≤ n`, ascending.
pub fn lower_divisors(n: u64) -> Vec<u64> {
    let mut divs = divisors(n);
    divs.retain(|&d| d as u128 * d as u128 <= n as u128);
    divs
}

/// Expands the lower half `d ≤ √n` into the full ascending divisor list.
pub fn expand_lower(n: u64, lower: &[u64], out: &mut Vec<u64>) {
    out.clear();
    out.extend_from_slice(lower);
    let skip_center = lower
        .last()
        .is_some_and(|&d| d as u128 * d as u128 == n as u128);
    let upper = if skip_center {
        &lower[..lower.len() - 1]
    } else {
        lower
    };
    out.extend(upper.iter().rev().map(|&d| n / d));
}

/// One point `(d, N/d)` per divisor, ascending in `x`.
pub fn lattice_points(n: u64) -> Vec<LatticePoint> {
    divisors(n)
        .into_iter()
        .map(|d| LatticePoint::new(d, n / d))
        .collect()
}

/// The multiset `{|x − y|}` over all lattice points, ascending.
pub fn abs_diffs(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for d in lower_divisors(n) {
        let diff = n / d - d;
        if diff == 0 {
            out.push(0);
        } else {
            out.extend([diff, diff]);
        }
    }
    out.sort_unstable();
    out
}

/// Minimum over 3-point subsets of the largest `|x − y|`.
pub fn min_max_diff_3(n: u64) -> Option<u64> {
    min_max_diff_3_from_lower(n, &lower_divisors(n)).map(|t| t.max_diff)
}

/// Minimum over same-side 3-point subsets (`x > √N` strictly) of the largest `|x − y|`.
pub fn min_max_diff_3_same_side(n: u64) -> Option<u64> {
    min_max_diff_3_same_side_from_lower(n, &lower_divisors(n)).map(|t| t.max_diff)
}

/// Minimizing triple for [`min_max_diff_3`] given the divisors `d ≤ √n`.
///
/// The three smallest diffs always come from the two divisors just below
/// `√n`: either a central point plus a mirror pair, or a mirror pair plus one
/// point of the next pair. Either way the maximum is `n/d − d` for the
/// second-largest lower divisor `d`.
pub fn min_max_diff_3_from_lower(n: u64, lower: &[u64]) -> Option<PointTriple> {
    let len = lower.len();
    if len < 2 {
        return None;
    }
    let (d0, d1) = (lower[len - 1], lower[len - 2]);
    let p1 = LatticePoint::new(d1, n / d1);
    let p0 = LatticePoint::new(d0, n / d0);
    let points = if p0.x == p0.y {
        [p1, p0, p1.mirror()]
    } else {
        [p1, p0, p0.mirror()]
    };
    Some(PointTriple {
        n,
        points,
        max_diff: p1.abs_diff(),
    })
}

/// Minimizing triple for [`min_max_diff_3_same_side`] given the divisors `d ≤ √n`.
pub fn min_max_diff_3_same_side_from_lower(n: u64, lower: &[u64]) -> Option<PointTriple> {
    let strict = match lower.last() {
        Some(&d) if d as u128 * d as u128 == n as u128 => &lower[..lower.len() - 1],
        _ => lower,
    };
    let len = strict.len();
    if len < 3 {
        return None;
    }
    let points =
        [strict[len - 1], strict[len - 2], strict[len - 3]].map(|d| LatticePoint::new(n / d, d));
    Some(PointTriple {
        n,
        points,
        max_diff: points[2].abs_diff(),
    })
}

/// Calls `f` on the close triple of every `d1 < d2 < d3` in `divisors`.
pub fn for_each_close_triple(n: u64, divisors: &[u64], mut f: impl FnMut(CloseTriple)) {
    for (i, &d1) in divisors.iter().enumerate() {
        for (j, &d2) in divisors.iter().enumerate().skip(i + 1) {
            for &d3 in &divisors[j + 1..] {
                f(CloseTriple::from_divisors(n, d1, d2, d3));
            }
        }
    }
}

/// Every close triple of `n`; `C(τ(n), 3)` of them.
pub fn close_triples(n: u64) -> Vec<CloseTriple> {
    let divs = divisors(n);
    let mut out = Vec::new();
    for_each_close_triple(n, &divs, |t| out.push(t));
    out
}

/// Recovers `A` and `B` from the increments, if they determine a triple.
///
/// `A = a2·a1·(b2 − b1)/D` and `B = b2·b1·(a2 − a1)/D` with
/// `D = a2·b1 − b2·a1`. Returns `None` when `D ≤ 0` or a division is inexact.
pub fn reconstruct(a1: u64, b1: u64, a2: u64, b2: u64) -> Result<Option<CloseTriple>> {
    if a1 == 0 || b1 == 0 || a1 >= a2 || b1 >= b2 {
        return Err(Error::Domain(format!(
            "reconstruct: need 0 < a1 < a2 and 0 < b1 < b2, got ({a1}, {b1}, {a2}, {b2})"
        )));
    }
    let (a1w, b1w, a2w, b2w) = (a1 as u128, b1 as u128, a2 as u128, b2 as u128);
    let (lhs, rhs) = (a2w * b1w, b2w * a1w);
    if lhs <= rhs {
        return Ok(None);
    }
    let det = lhs - rhs;
    let overflow = || Error::Overflow("reconstruct");
    let num_a = (a2w * a1w).checked_mul(b2w - b1w).ok_or_else(overflow)?;
    let num_b = (b2w * b1w).checked_mul(a2w - a1w).ok_or_else(overflow)?;
    if num_a % det != 0 || num_b % det != 0 {
        return Ok(None);
    }
    let a = u64::try_from(num_a / det).map_err(|_| overflow())?;
    let b = u64::try_from(num_b / det).map_err(|_| overflow())?;
    let n = (a as u128) * (b as u128);
    if n > MAX_N as u128 {
        return Err(overflow());
    }
    CloseTriple::new(n as u64, a, b, a1, b1, a2, b2).map(Some)
}
