//! Exit criteria. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use hyperfact::arith::PellSolutions;
use hyperfact::bounds::{thm2_bound, thm3_bound};
use hyperfact::families::pell_family;
use hyperfact::lattice::{
    close_triples, lattice_points, min_max_diff_3, min_max_diff_3_same_side, CloseTriple,
    LatticePoint,
};
use hyperfact::verify::{
    emit_report, verify_thm0, verify_thm05, verify_thm1, verify_thm2, verify_thm3, ReportFormat,
    SweepOptions, SweepReport, Witness,
};
use rand::{rngs::StdRng, Rng, SeedableRng};
use twofloat::TwoFloat;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn jobs4() -> SweepOptions {
    SweepOptions {
        jobs: 4,
        ..SweepOptions::default()
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })
}

fn equality_ns(report: &SweepReport) -> BTreeSet<u64> {
    report.equality_cases.iter().map(|r| r.n).collect()
}

/// Worked examples from the introduction, exact.
fn regression() -> Outcome {
    let start = Instant::now();
    let want = [(1881, 2100), (1890, 2090), (1900, 2079)].map(|(x, y)| LatticePoint::new(x, y));
    let found = close_triples(3_950_100)
        .into_iter()
        .any(|t| t.points() == want);
    ensure(found, || {
        "3950100 triple (1881,2100)/(1890,2090)/(1900,2079) missing".into()
    })?;

    // 2N^{1/4} + 1/(2N^{1/4} - 1) = 200.00397...
    let b2 = thm2_bound(99_990_000).map_err(|e| e.to_string())?.value;
    ensure(b2 == 200 && b2 == 200.00397f64.floor() as u64, || {
        format!("thm2_bound(99990000) = {b2}")
    })?;

    // 2√2·N^{1/4} = 139.9714...
    let b3 = thm3_bound(5_997_600).map_err(|e| e.to_string())?.value;
    ensure(
        b3 == 140 && b3 == (139.9714f64 + 0.5).floor() as u64,
        || format!("thm3_bound(5997600) = {b3}"),
    )?;

    let t72 = CloseTriple {
        n: 72,
        a: 6,
        b: 12,
        a1: 2,
        b1: 3,
        a2: 3,
        b2: 4,
    };
    ensure(close_triples(72).contains(&t72), || {
        "72 = 6·12 = 8·9 = 9·8 with (2,3,3,4) missing".into()
    })?;
    within(start.elapsed(), Duration::from_secs(1), "regression")?;
    Ok(format!("all four examples exact in {:?}", start.elapsed()))
}

fn thm2_sweep() -> Outcome {
    let start = Instant::now();
    let r = verify_thm2(6, 1_000_000, &jobs4()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.violations.is_empty(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations[0]
        )
    })?;
    let eq = equality_ns(&r);
    let family: Vec<u64> = (1u64..)
        .map(|k| k * (k + 1) * (k + 1) * (k + 2))
        .take_while(|&n| n <= 1_000_000)
        .collect();
    ensure(family.len() == 30, || {
        format!("expected K = 1..30, got {}", family.len())
    })?;
    let missing: Vec<u64> = family.iter().copied().filter(|n| !eq.contains(n)).collect();
    ensure(missing.is_empty(), || {
        format!("family values without equality: {missing:?}")
    })?;
    within(elapsed, Duration::from_secs(120), "theorem 2 sweep")?;
    Ok(format!(
        "0 violations over {} N; {} equality cases incl. all 30 family values; {elapsed:?}",
        r.checked_count,
        eq.len()
    ))
}

fn thm3_sweep() -> Outcome {
    let start = Instant::now();
    let lo = 1u64 << 20;
    let r = verify_thm3(lo, lo + (1 << 18), false, &jobs4()).map_err(|e| e.to_string())?;
    ensure(r.violations.is_empty(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations[0]
        )
    })?;
    let mut sharp = Vec::new();
    for n in 2..=6u64 {
        let t = pell_family(n).map_err(|e| e.to_string())?.value;
        let y = PellSolutions::default().nth(n as usize - 1).unwrap().y;
        let stat = min_max_diff_3_same_side(t.n).ok_or("no same-side triple")?;
        let bound = thm3_bound(t.n).map_err(|e| e.to_string())?.value;
        ensure(stat == bound && stat == 2 * y, || {
            format!(
                "pell n={n}: N={} stat={stat} bound={bound} 2y={}",
                t.n,
                2 * y
            )
        })?;
        sharp.push(stat);
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(300), "theorem 3 sweep")?;
    Ok(format!(
        "0 violations over {} N; Pell n=2..6 sharp at {sharp:?}; {elapsed:?}",
        r.checked_count
    ))
}

fn thm0_search() -> Outcome {
    let r = verify_thm0(1, 10_000, &jobs4()).map_err(|e| e.to_string())?;
    let at_four: Vec<_> = r
        .violations
        .iter()
        .filter(|v| matches!(v.witness, Witness::Triple(t) if t.max_increment() == 4))
        .collect();
    ensure(at_four.len() == 1 && r.violations.len() == 1, || {
        format!("violations: {:?}", r.violations)
    })?;
    let v = at_four[0];
    let expect = CloseTriple {
        n: 72,
        a: 6,
        b: 12,
        a1: 2,
        b1: 3,
        a2: 3,
        b2: 4,
    };
    ensure(v.witness == Witness::Triple(expect), || {
        format!("unexpected witness {:?}", v.witness)
    })?;
    Ok("exactly one violating triple: 72 = 6·12 = 8·9 = 9·8, B = 12 > 9".into())
}

fn thm05_sweep() -> Outcome {
    let start = Instant::now();
    let r = verify_thm05(1, 100_000, 5, &jobs4()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.violations.is_empty(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations[0]
        )
    })?;
    within(elapsed, Duration::from_secs(120), "theorem 0.5 sweep")?;
    Ok(format!(
        "0 violations over {} N; {elapsed:?}",
        r.checked_count
    ))
}

fn thm1_sweep() -> Outcome {
    let start = Instant::now();
    let r = verify_thm1(1, 1_000_000, &jobs4()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.violations.is_empty(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations[0]
        )
    })?;
    // equality set from A = (2K+1)(K+1)(K-1), B = (2K-1)K²
    let derived: BTreeSet<u64> = (2u64..)
        .map(|k| (2 * k + 1) * (k + 1) * (k - 1) * (2 * k - 1) * k * k)
        .take_while(|&n| n <= 1_000_000)
        .collect();
    let stated: BTreeSet<u64> = [180, 2520, 15120, 59400, 180180, 458640].into();
    ensure(derived == stated, || {
        format!("family formula gives {derived:?}")
    })?;
    let eq = equality_ns(&r);
    ensure(eq == stated, || format!("sweep equality set {eq:?}"))?;
    for rec in &r.equality_cases {
        let Witness::Triple(t) = rec.witness else {
            return Err("equality witness is not a triple".into());
        };
        let a2 = t.a2;
        let shape = a2 > 3
            && a2 % 2 == 1
            && t.a1 == a2.div_ceil(2)
            && t.b1 == (a2 - 1) / 2
            && t.b2 == a2 - 2
            && 4 * t.a == a2 * (a2 + 1) * (a2 - 3)
            && 4 * t.b == (a2 - 2) * (a2 - 1) * (a2 - 1);
        ensure(shape, || {
            format!("equality case without the odd-a2 shape: {t:?}")
        })?;
    }
    Ok(format!(
        "0 violations over {} N; equality set {eq:?}, all odd-a2 shaped; {elapsed:?}",
        r.checked_count
    ))
}

fn brute(points: &[LatticePoint]) -> Option<u64> {
    let mut best = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                let m = points[i]
                    .abs_diff()
                    .max(points[j].abs_diff())
                    .max(points[k].abs_diff());
                best = Some(best.map_or(m, |b: u64| b.min(m)));
            }
        }
    }
    best
}

fn oracle_equivalence() -> Outcome {
    for n in 1..=10_000u64 {
        let pts = lattice_points(n);
        let expect = brute(&pts);
        ensure(min_max_diff_3(n) == expect, || {
            format!("m3 mismatch at N={n}")
        })?;
        let same: Vec<LatticePoint> = pts.into_iter().filter(|p| p.x * p.x > n).collect();
        let expect = brute(&same);
        ensure(min_max_diff_3_same_side(n) == expect, || {
            format!("same-side mismatch at N={n}")
        })?;
    }

    let exe = env!("CARGO_BIN_EXE_hyperfact");
    let run = |jobs: &str, chunk: &str, format: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(exe)
            .args([
                "verify",
                "--theorem",
                "2",
                "--from",
                "6",
                "--to",
                "30000",
                "--no-timing",
            ])
            .args(["--jobs", jobs, "--chunk-len", chunk, "--format", format])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!("exit {:?}", out.status.code())
        })?;
        Ok(out.stdout)
    };
    for format in ["json", "csv"] {
        let unchunked = run("1", "1000000", format)?;
        for (jobs, chunk) in [("1", "1000"), ("2", "777"), ("4", "4096"), ("8", "1")] {
            let chunked = run(jobs, chunk, format)?;
            ensure(chunked == unchunked, || {
                format!("{format} differs at jobs={jobs} chunk={chunk}")
            })?;
        }
    }

    // library merge over an out-of-order partition
    let whole = verify_thm1(
        1,
        40_000,
        &SweepOptions {
            jobs: 1,
            chunk_len: 1 << 20,
            ..SweepOptions::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let parts = [(20_001, 40_000), (1, 5), (6, 20_000)]
        .map(|(a, b)| verify_thm1(a, b, &jobs4()).map_err(|e| e.to_string()));
    let parts: Vec<SweepReport> = parts.into_iter().collect::<Result<_, _>>()?;
    let merged = SweepReport::merge(parts).map_err(|e| e.to_string())?;
    let same = emit_report(&merged, ReportFormat::Json, false)
        == emit_report(&whole, ReportFormat::Json, false);
    ensure(same, || "merged partition differs from single run".into())?;
    Ok("both statistics match brute force for N <= 10^4; json/csv identical across jobs 1/2/4/8 and chunkings".into())
}

/// Floor of a double-double value, or `None` within `margin` of an integer.
fn reference_floor(value: TwoFloat, margin: f64) -> Option<u64> {
    let floor = value.floor();
    let frac = value - floor;
    (frac > margin && TwoFloat::from(1.0) - frac > margin).then(|| floor.hi() as u64)
}

fn exactness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    // double-double carries ~106 bits; values here are below 2^12
    let margin = 1e-20;
    let two = TwoFloat::from(2.0);
    let sqrt2 = two.sqrt();
    let mut excluded = 0;
    for _ in 0..100_000 {
        let n: u64 = rng.gen_range(2..=1_000_000_000_000);
        let t = TwoFloat::from(n as f64).sqrt().sqrt();
        let b2 = thm2_bound(n).map_err(|e| e.to_string())?;
        let b3 = thm3_bound(n).map_err(|e| e.to_string())?;
        ensure(b2.certificate.replay() == Ok(true), || {
            format!("thm2 certificate fails to replay at N={n}")
        })?;
        ensure(b3.certificate.replay() == Ok(true), || {
            format!("thm3 certificate fails to replay at N={n}")
        })?;
        let target2 = two * t + TwoFloat::from(1.0) / (two * t - TwoFloat::from(1.0));
        let target3 = two * sqrt2 * t + TwoFloat::from(0.5);
        for (value, target) in [(b2.value, target2), (b3.value, target3)] {
            match reference_floor(target, margin) {
                Some(r) => ensure(r == value, || {
                    format!("N={n}: exact {value}, reference {r}")
                })?,
                None => excluded += 1,
            }
        }
    }
    Ok(format!("10^5 samples: certificates replay, reference agrees ({excluded} within the reference error margin)"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 worked-example regression", regression),
        ("2 theorem 2 sweep [6, 10^6]", thm2_sweep),
        (
            "3 theorem 3 sweep [2^20, 2^20 + 2^18] + Pell sharpness",
            thm3_sweep,
        ),
        ("4 theorem 0 counterexample search N <= 10^4", thm0_search),
        ("5 theorem 0.5 sweep N <= 10^5", thm05_sweep),
        ("6 theorem 1 sweep N <= 10^6 + equality set", thm1_sweep),
        (
            "7 oracle equivalence + chunking determinism",
            oracle_equivalence,
        ),
        ("8 exactness on 10^5 random N <= 10^12", exactness),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
