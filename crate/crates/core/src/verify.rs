//! Range sweeps that check the bounds against every `N` in an interval.
//!
//! A sweep splits `[lo, hi]` into fixed-length chunks. Each chunk builds its
//! lower divisor lists with [`LowerDivisorSieve`] and runs a per-`N` kernel;
//! chunks run on a rayon pool of `jobs` threads and are merged in range
//! order. Chunk boundaries depend only on `chunk_len`, so the merged report
//! does not depend on `jobs`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::isqrt;
use crate::bounds::{thm05_bound, thm1_bound, thm2_bound, thm3_bound, RationalBound};
use crate::error::{Error, Result};
use crate::lattice::{
    expand_lower, for_each_close_triple, min_max_diff_3_from_lower,
    min_max_diff_3_same_side_from_lower, CloseTriple, PointTriple,
};

/// Smallest `N` covered by the three-point bound on `max |x − y|`.
pub const THM2_MIN_N: u64 = 6;
/// Smallest `N` covered by the same-side bound.
pub const THM3_MIN_N: u64 = 1 << 20;
/// `max(a2, b2)` threshold of the corrected cubic bound.
pub const THM05_MIN_M: u64 = 5;
/// `max(a2, b2)` threshold of the withdrawn cubic bound.
pub const THM0_MIN_M: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Withdrawn cubic bound, `max(a2, b2) ≥ 4`; counterexample search.
    Thm0,
    /// Corrected cubic bound, `max(a2, b2) ≥ 5`.
    Thm05,
    /// `A ≤ a2(a2 − 3)(a2 + 1)/4` when `B ≤ √N ≤ A`.
    Thm1,
    /// Three points: `max |x − y| ≥ ⌊2N^{1/4} + 1/(2N^{1/4} − 1)⌋`.
    Thm2,
    /// Same-side points: `max |x − y| ≥ ⌊2√2·N^{1/4} + 1/2⌋`.
    Thm3,
}

impl Theorem {
    pub fn label(&self) -> &'static str {
        match self {
            Theorem::Thm0 => "0",
            Theorem::Thm05 => "0.5",
            Theorem::Thm1 => "1",
            Theorem::Thm2 => "2",
            Theorem::Thm3 => "3",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Theorem::Thm0),
            "0.5" => Ok(Theorem::Thm05),
            "1" => Ok(Theorem::Thm1),
            "2" => Ok(Theorem::Thm2),
            "3" => Ok(Theorem::Thm3),
            _ => Err(Error::Domain(format!(
                "unknown theorem '{s}' (expected 0|0.5|1|2|3)"
            ))),
        }
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// The value a statistic was compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundValue {
    Integer(u64),
    Rational(RationalBound),
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The configuration a record is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Triple(CloseTriple),
    Points(PointTriple),
}

/// Which check produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// The theorem's bound itself.
    Bound,
    /// `max(a2, b2)³ > 4·max(A, B)`.
    Lattice1,
    /// An equality case that does not have the characterized shape.
    EqualityShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub statistic: u64,
    pub bound: BoundValue,
    pub check: Check,
    pub witness: Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Violation,
    Equality,
    Informational,
}

impl RecordKind {
    pub fn label(&self) -> &'static str {
        match self {
            RecordKind::Violation => "violation",
            RecordKind::Equality => "equality",
            RecordKind::Informational => "informational",
        }
    }
}

/// Outcome of one sweep over `[range.0, range.1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub range: (u64, u64),
    /// Number of `N` whose statistic was compared against the bound.
    pub checked_count: u64,
    /// Number of `N` passed over because `τ(N)` exceeded the configured limit.
    pub skipped_count: u64,
    pub violations: Vec<CaseRecord>,
    pub equality_cases: Vec<CaseRecord>,
    pub informational: Vec<CaseRecord>,
    pub elapsed: Duration,
    pub chunk_count: u64,
}

impl SweepReport {
    fn empty(theorem: Theorem, range: (u64, u64)) -> Self {
        SweepReport {
            theorem,
            range,
            checked_count: 0,
            skipped_count: 0,
            violations: Vec::new(),
            equality_cases: Vec::new(),
            informational: Vec::new(),
            elapsed: Duration::ZERO,
            chunk_count: 0,
        }
    }

    /// Combines reports over disjoint ranges of the same theorem.
    ///
    /// The ranges must tile one interval; they may be given in any order.
    pub fn merge(parts: impl IntoIterator<Item = SweepReport>) -> Result<SweepReport> {
        let mut parts: Vec<SweepReport> = parts.into_iter().collect();
        parts.sort_by_key(|p| p.range.0);
        let Some(first) = parts.first() else {
            return Err(Error::Domain("merge: no reports".into()));
        };
        let mut out = SweepReport::empty(first.theorem, (first.range.0, first.range.0));
        for (i, p) in parts.into_iter().enumerate() {
            if p.theorem != out.theorem {
                return Err(Error::Domain(
                    "merge: reports for different theorems".into(),
                ));
            }
            if i > 0 && p.range.0 != out.range.1 + 1 {
                return Err(Error::Domain(format!(
                    "merge: range [{}, {}] does not continue [{}, {}]",
                    p.range.0, p.range.1, out.range.0, out.range.1
                )));
            }
            out.range.1 = p.range.1;
            out.checked_count += p.checked_count;
            out.skipped_count += p.skipped_count;
            out.violations.extend(p.violations);
            out.equality_cases.extend(p.equality_cases);
            out.informational.extend(p.informational);
            out.elapsed += p.elapsed;
            out.chunk_count += p.chunk_count;
        }
        out.sort_records();
        Ok(out)
    }

    fn sort_records(&mut self) {
        // stable: records of one N keep their enumeration order
        for list in [
            &mut self.violations,
            &mut self.equality_cases,
            &mut self.informational,
        ] {
            list.sort_by_key(|r| r.n);
        }
    }

    /// Equality of everything except timing and chunking metadata.
    pub fn same_findings(&self, other: &SweepReport) -> bool {
        self.theorem == other.theorem
            && self.range == other.range
            && self.checked_count == other.checked_count
            && self.skipped_count == other.skipped_count
            && self.violations == other.violations
            && self.equality_cases == other.equality_cases
            && self.informational == other.informational
    }

    /// All records tagged with their kind, ordered by `N` and then kind.
    pub fn rows(&self) -> Vec<(RecordKind, &CaseRecord)> {
        let mut rows: Vec<(RecordKind, &CaseRecord)> = self
            .violations
            .iter()
            .map(|r| (RecordKind::Violation, r))
            .chain(
                self.equality_cases
                    .iter()
                    .map(|r| (RecordKind::Equality, r)),
            )
            .chain(
                self.informational
                    .iter()
                    .map(|r| (RecordKind::Informational, r)),
            )
            .collect();
        rows.sort_by_key(|(_, r)| r.n);
        rows
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    theorem: Theorem,
    range: [u64; 2],
    checked_count: u64,
    skipped_count: u64,
    violations: &'a [CaseRecord],
    equality_cases: &'a [CaseRecord],
    informational: &'a [CaseRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chunk_count: Option<u64>,
}

/// Serializes a report. With `timing == false` the execution metadata
/// (elapsed time and chunk count) is left out, which makes the output a pure
/// function of the findings.
pub fn emit_report(report: &SweepReport, format: ReportFormat, timing: bool) -> String {
    match format {
        ReportFormat::Json => {
            let view = JsonReport {
                theorem: report.theorem,
                range: [report.range.0, report.range.1],
                checked_count: report.checked_count,
                skipped_count: report.skipped_count,
                violations: &report.violations,
                equality_cases: &report.equality_cases,
                informational: &report.informational,
                elapsed_ms: timing.then_some(report.elapsed.as_millis() as u64),
                chunk_count: timing.then_some(report.chunk_count),
            };
            let mut out = serde_json::to_string_pretty(&view).expect("report serializes");
            out.push('\n');
            out
        }
        ReportFormat::Csv => {
            let mut out = String::from("N,statistic,bound,kind\n");
            for (kind, r) in report.rows() {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.n,
                    r.statistic,
                    r.bound,
                    kind.label()
                ));
            }
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads.
    pub jobs: usize,
    /// Numbers per chunk.
    pub chunk_len: u64,
    /// Which `N` the triple-enumerating sweeps pass over.
    pub tau_limit: TauLimit,
}

/// `N` below this are never skipped under [`TauLimit::Default`].
pub const TAU_LIMIT_FROM: u64 = 100_000;
/// Divisor-count cap applied from [`TAU_LIMIT_FROM`] on under [`TauLimit::Default`].
pub const DEFAULT_TAU_LIMIT: usize = 1024;

/// Cap on `τ(N)` for sweeps that enumerate all `C(τ, 3)` divisor triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TauLimit {
    /// No cap below [`TAU_LIMIT_FROM`], [`DEFAULT_TAU_LIMIT`] from there on.
    #[default]
    Default,
    Unlimited,
    Max(usize),
}

impl TauLimit {
    pub fn skips(self, n: u64, tau: usize) -> bool {
        match self {
            TauLimit::Default => n >= TAU_LIMIT_FROM && tau > DEFAULT_TAU_LIMIT,
            TauLimit::Unlimited => false,
            TauLimit::Max(limit) => tau > limit,
        }
    }
}

impl FromStr for TauLimit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(TauLimit::Default),
            "none" => Ok(TauLimit::Unlimited),
            _ => s.parse().map(TauLimit::Max).map_err(|_| {
                Error::Domain(format!(
                    "tau limit must be 'default', 'none' or a count, got '{s}'"
                ))
            }),
        }
    }
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            chunk_len: 1 << 15,
            tau_limit: TauLimit::Default,
        }
    }
}

/// Divisors `d ≤ √n` of every `n` in `[lo, hi]`, ascending, in one flat buffer.
#[derive(Debug, Clone)]
pub struct LowerDivisorSieve {
    lo: u64,
    offsets: Vec<usize>,
    divisors: Vec<u64>,
}

impl LowerDivisorSieve {
    pub fn new(lo: u64, hi: u64) -> Self {
        assert!(
            1 <= lo && lo <= hi,
            "sieve range must satisfy 1 <= lo <= hi"
        );
        let len = (hi - lo + 1) as usize;
        let root = isqrt(hi);
        let for_each_multiple = |d: u64, f: &mut dyn FnMut(usize)| {
            let first = (d * d).max(lo.div_ceil(d) * d);
            let mut n = first;
            while n <= hi {
                f((n - lo) as usize);
                match n.checked_add(d) {
                    Some(next) => n = next,
                    None => break,
                }
            }
        };
        let mut counts = vec![0usize; len + 1];
        for d in 1..=root {
            for_each_multiple(d, &mut |i| counts[i + 1] += 1);
        }
        for i in 0..len {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut cursor = offsets.clone();
        let mut divisors = vec![0u64; offsets[len]];
        for d in 1..=root {
            for_each_multiple(d, &mut |i| {
                divisors[cursor[i]] = d;
                cursor[i] += 1;
            });
        }
        LowerDivisorSieve {
            lo,
            offsets,
            divisors,
        }
    }

    pub fn lower(&self, n: u64) -> &[u64] {
        let i = (n - self.lo) as usize;
        &self.divisors[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn range(&self) -> (u64, u64) {
        (self.lo, self.lo + self.offsets.len() as u64 - 2)
    }
}

#[derive(Default)]
struct ChunkAcc {
    checked: u64,
    skipped: u64,
    violations: Vec<CaseRecord>,
    equality: Vec<CaseRecord>,
    informational: Vec<CaseRecord>,
}

/// `lower.len()` determines `τ(n)`.
fn tau(n: u64, lower: &[u64]) -> usize {
    match lower.last() {
        Some(&d) if d as u128 * d as u128 == n as u128 => 2 * lower.len() - 1,
        _ => 2 * lower.len(),
    }
}

fn sweep<K>(
    theorem: Theorem,
    lo: u64,
    hi: u64,
    opts: &SweepOptions,
    kernel: K,
) -> Result<SweepReport>
where
    K: Fn(u64, &[u64], &mut Vec<u64>, &mut ChunkAcc) -> Result<()> + Sync,
{
    if lo == 0 || lo > hi {
        return Err(Error::Domain(format!(
            "sweep range must satisfy 1 <= lo <= hi, got [{lo}, {hi}]"
        )));
    }
    if opts.jobs == 0 || opts.chunk_len == 0 {
        return Err(Error::Domain("jobs and chunk_len must be positive".into()));
    }
    let start = Instant::now();
    let mut chunks = Vec::new();
    let mut a = lo;
    loop {
        let b = a.saturating_add(opts.chunk_len - 1).min(hi);
        chunks.push((a, b));
        if b == hi {
            break;
        }
        a = b + 1;
    }
    let run_chunk = |&(a, b): &(u64, u64)| -> Result<ChunkAcc> {
        let sieve = LowerDivisorSieve::new(a, b);
        let mut acc = ChunkAcc::default();
        let mut scratch = Vec::new();
        for n in a..=b {
            kernel(n, sieve.lower(n), &mut scratch, &mut acc)?;
        }
        Ok(acc)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    let parts: Vec<Result<ChunkAcc>> = pool.install(|| chunks.par_iter().map(run_chunk).collect());

    let mut report = SweepReport::empty(theorem, (lo, hi));
    report.chunk_count = chunks.len() as u64;
    for part in parts {
        let part = part?;
        report.checked_count += part.checked;
        report.skipped_count += part.skipped;
        report.violations.extend(part.violations);
        report.equality_cases.extend(part.equality);
        report.informational.extend(part.informational);
    }
    report.sort_records();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Checks the three-point bound for every `N ∈ [lo, hi]` with `τ(N) ≥ 3`.
pub fn verify_thm2(lo: u64, hi: u64, opts: &SweepOptions) -> Result<SweepReport> {
    if lo < THM2_MIN_N {
        return Err(Error::Domain(format!(
            "theorem 2 sweeps need lo >= {THM2_MIN_N}, got {lo}"
        )));
    }
    sweep(Theorem::Thm2, lo, hi, opts, |n, lower, _, acc| {
        let Some(witness) = min_max_diff_3_from_lower(n, lower) else {
            return Ok(());
        };
        acc.checked += 1;
        let bound = thm2_bound(n)?.value;
        let record = CaseRecord {
            n,
            statistic: witness.max_diff,
            bound: BoundValue::Integer(bound),
            check: Check::Bound,
            witness: Witness::Points(witness),
        };
        match witness.max_diff.cmp(&bound) {
            Ordering::Less => acc.violations.push(record),
            Ordering::Equal => acc.equality.push(record),
            Ordering::Greater => {}
        }
        Ok(())
    })
}

/// Checks the same-side bound for every `N ∈ [lo, hi]` with three divisors above `√N`.
///
/// Below `2^20` the bound is not claimed. With `below_threshold_informational`
/// those `N` are still examined and any case with statistic `≤` bound is kept
/// as informational; without it they are skipped.
pub fn verify_thm3(
    lo: u64,
    hi: u64,
    below_threshold_informational: bool,
    opts: &SweepOptions,
) -> Result<SweepReport> {
    sweep(Theorem::Thm3, lo, hi, opts, |n, lower, _, acc| {
        let below = n < THM3_MIN_N;
        if below && !below_threshold_informational {
            return Ok(());
        }
        let Some(witness) = min_max_diff_3_same_side_from_lower(n, lower) else {
            return Ok(());
        };
        acc.checked += 1;
        let bound = thm3_bound(n)?.value;
        let record = CaseRecord {
            n,
            statistic: witness.max_diff,
            bound: BoundValue::Integer(bound),
            check: Check::Bound,
            witness: Witness::Points(witness),
        };
        match (below, witness.max_diff.cmp(&bound)) {
            (_, Ordering::Greater) => {}
            (true, _) => acc.informational.push(record),
            (false, Ordering::Less) => acc.violations.push(record),
            (false, Ordering::Equal) => acc.equality.push(record),
        }
        Ok(())
    })
}

fn lattice1_record(t: CloseTriple) -> CaseRecord {
    let m = t.max_increment();
    CaseRecord {
        n: t.n,
        statistic: m,
        bound: BoundValue::Integer(4 * t.max_side()),
        check: Check::Lattice1,
        witness: Witness::Triple(t),
    }
}

/// The equality configuration for a given odd `a2 > 3`.
fn has_equality_shape(t: &CloseTriple) -> bool {
    let a2 = t.a2 as u128;
    a2 > 3
        && a2 % 2 == 1
        && 2 * t.a1 as u128 == a2 + 1
        && 2 * t.b1 as u128 == a2 - 1
        && t.b2 as u128 + 2 == a2
        && 4 * t.a as u128 == a2 * (a2 + 1) * (a2 - 3)
        && 4 * t.b as u128 == (a2 - 2) * (a2 - 1) * (a2 - 1)
}

/// Checks `4A ≤ a2(a2 − 3)(a2 + 1)` for every close triple with `B ≤ √N ≤ A`.
///
/// Every equality case must match the odd-`a2` configuration; one that does
/// not is reported as a violation with [`Check::EqualityShape`].
pub fn verify_thm1(lo: u64, hi: u64, opts: &SweepOptions) -> Result<SweepReport> {
    let tau_limit = opts.tau_limit;
    sweep(Theorem::Thm1, lo, hi, opts, |n, lower, upper, acc| {
        // divisors ≥ √N, ascending; A is the smallest of the three
        upper.clear();
        upper.extend(lower.iter().rev().map(|&d| n / d));
        if upper.len() < 3 {
            return Ok(());
        }
        if tau_limit.skips(n, tau(n, lower)) {
            acc.skipped += 1;
            return Ok(());
        }
        acc.checked += 1;
        let mut failure = None;
        for_each_close_triple(n, upper, |t| {
            if failure.is_some() {
                return;
            }
            if !t.lattice1_holds() {
                acc.violations.push(lattice1_record(t));
            }
            let bound = match thm1_bound(t.a2) {
                Ok(b) => b,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
            let record = CaseRecord {
                n,
                statistic: t.a,
                bound: BoundValue::Rational(bound),
                check: Check::Bound,
                witness: Witness::Triple(t),
            };
            match bound.cmp_integer(t.a) {
                Ordering::Greater => acc.violations.push(record),
                Ordering::Equal => {
                    if !has_equality_shape(&t) {
                        acc.violations.push(CaseRecord {
                            check: Check::EqualityShape,
                            ..record
                        });
                    }
                    acc.equality.push(record);
                }
                Ordering::Less => {}
            }
        });
        failure.map_or(Ok(()), Err)
    })
}

fn cubic_sweep(
    theorem: Theorem,
    lo: u64,
    hi: u64,
    min_m: u64,
    opts: &SweepOptions,
) -> Result<SweepReport> {
    let tau_limit = opts.tau_limit;
    sweep(theorem, lo, hi, opts, |n, lower, divs, acc| {
        if lower.len() < 2 {
            return Ok(());
        }
        if tau_limit.skips(n, tau(n, lower)) {
            acc.skipped += 1;
            return Ok(());
        }
        expand_lower(n, lower, divs);
        let mut examined = false;
        let mut failure = None;
        for_each_close_triple(n, divs, |t| {
            if failure.is_some() {
                return;
            }
            if !t.lattice1_holds() {
                acc.violations.push(lattice1_record(t));
            }
            let m = t.max_increment();
            if m < min_m {
                return;
            }
            examined = true;
            let bound = match thm05_bound(m) {
                Ok(b) => b,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
            let record = CaseRecord {
                n,
                statistic: t.max_side(),
                bound: BoundValue::Rational(bound),
                check: Check::Bound,
                witness: Witness::Triple(t),
            };
            match bound.cmp_integer(t.max_side()) {
                Ordering::Greater => acc.violations.push(record),
                Ordering::Equal => acc.equality.push(record),
                Ordering::Less => {}
            }
        });
        if examined {
            acc.checked += 1;
        }
        failure.map_or(Ok(()), Err)
    })
}

/// Checks `4·max(A, B) ≤ m(m − 1)²`, `m = max(a2, b2)`, for every triple with `m ≥ min_m`.
pub fn verify_thm05(lo: u64, hi: u64, min_m: u64, opts: &SweepOptions) -> Result<SweepReport> {
    if min_m < THM0_MIN_M {
        return Err(Error::Domain(format!(
            "min_m must be at least {THM0_MIN_M}, got {min_m}"
        )));
    }
    cubic_sweep(Theorem::Thm05, lo, hi, min_m, opts)
}

/// Counterexample search for the withdrawn bound at `max(a2, b2) ≥ 4`.
pub fn verify_thm0(lo: u64, hi: u64, opts: &SweepOptions) -> Result<SweepReport> {
    cubic_sweep(Theorem::Thm0, lo, hi, THM0_MIN_M, opts)
}

/// The only triple known to break the withdrawn bound.
pub const THM0_KNOWN_WITNESS: CloseTriple = CloseTriple {
    n: 72,
    a: 6,
    b: 12,
    a1: 2,
    b1: 3,
    a2: 3,
    b2: 4,
};

/// True when every violation in a counterexample search is the known witness.
pub fn only_known_counterexamples(report: &SweepReport) -> bool {
    report
        .violations
        .iter()
        .all(|r| r.check == Check::Bound && r.witness == Witness::Triple(THM0_KNOWN_WITNESS))
}

/// Runs the sweep for `theorem` with its default threshold conventions.
pub fn verify(
    theorem: Theorem,
    lo: u64,
    hi: u64,
    below_threshold_informational: bool,
    opts: &SweepOptions,
) -> Result<SweepReport> {
    match theorem {
        Theorem::Thm0 => verify_thm0(lo, hi, opts),
        Theorem::Thm05 => verify_thm05(lo, hi, THM05_MIN_M, opts),
        Theorem::Thm1 => verify_thm1(lo, hi, opts),
        Theorem::Thm2 => verify_thm2(lo, hi, opts),
        Theorem::Thm3 => verify_thm3(lo, hi, below_threshold_informational, opts),
    }
}
