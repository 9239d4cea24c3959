//! Property-suite runner: sweeps each family of identities and bijections
//! over all shapes up to a size bound, in parallel over shapes, and reports
//! counts, timing, and the first (smallest) counterexample if any.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use qyt_core::bijection::{destandardize, restandardize, symmetry_bijection, verify_dst_fibers};
use qyt_core::formula::{
    check_durfee2_recurrence, check_section5_identity_a, check_section5_identity_b,
    check_symmetry_identity, hook_content_count, hook_length_count, qyt_count, qyt_count_durfee2,
};
use qyt_core::partition::partitions_of;
use qyt_core::schur::{nonzero_term_census, schur_via_fundamental, schur_via_ssyt};
use qyt_core::tableau::{
    count_qyt_brute, enumerate_qyt, enumerate_syt, qyt_max_entry_range, CountMode,
};
use qyt_core::{Durfee2Frame, Partition, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Formula,
    Bijection,
    Symmetry,
    Schur,
    Recurrence,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    max_n: usize,
    cases: u64,
    violations: u64,
    first_violation: Option<String>,
    elapsed_ms: u128,
}

/// Outcome of sweeping one shape: cases checked and any violation messages,
/// in sweep order.
type ShapeOutcome = (u64, Vec<String>);

fn sweep<F>(max_n: usize, per_shape: F) -> (u64, Vec<String>)
where
    F: Fn(&Partition) -> ShapeOutcome + Sync,
{
    let shapes: Vec<Partition> = (1..=max_n).flat_map(partitions_of).collect();
    let outcomes: Vec<ShapeOutcome> = shapes.par_iter().map(&per_shape).collect();
    let mut cases = 0;
    let mut violations = Vec::new();
    for (c, v) in outcomes {
        cases += c;
        violations.extend(v);
    }
    (cases, violations)
}

/// Closed formulas against the exhaustive oracle, the boundary reductions to
/// hook-content counts, the run-partition of the standard count, and the two
/// rearranged identities relating exact-max counts to bounded semistandard
/// counts.
fn suite_formula(max_n: usize) -> (u64, Vec<String>) {
    let (mut cases, mut bad) = sweep(max_n, |shape| {
        let mut cases = 0;
        let mut bad = Vec::new();
        let (lo, hi) = qyt_max_entry_range(shape).unwrap();
        let durfee = shape.durfee_size();
        if durfee <= 2 {
            let below = lo.saturating_sub(1);
            for m in below..=hi {
                cases += 1;
                let formula = qyt_count(shape, CountMode::Eq(m));
                let oracle = count_qyt_brute(shape, CountMode::Eq(m), None).unwrap();
                if formula != oracle {
                    bad.push(format!(
                        "formula {formula} != oracle {oracle} for shape {shape}, m = {m}"
                    ));
                }
            }
            // One step past the feasible range, kept cheap by the size cap.
            if shape.size() <= 10 {
                cases += 1;
                let m = hi + 1;
                let oracle = count_qyt_brute(shape, CountMode::Eq(m), None).unwrap();
                if oracle != BigUint::from(0u32) || qyt_count(shape, CountMode::Eq(m)) != oracle {
                    bad.push(format!(
                        "expected zero beyond the range for {shape}, m = {m}"
                    ));
                }
            }
        }
        if let Some(frame) = shape.durfee2_frame() {
            cases += 2;
            let l1 = frame.lambda1() as u32;
            if qyt_count_durfee2(&frame, lo) != hook_content_count(shape, lo) {
                bad.push(format!("min-m boundary mismatch for {shape}"));
            }
            if qyt_count_durfee2(&frame, hi) != hook_content_count(&shape.conjugate(), l1) {
                bad.push(format!("max-m boundary mismatch for {shape}"));
            }
        }
        // The exact-max counts partition the standard fillings.
        cases += 1;
        let total: BigUint = (lo..=hi).map(|m| qyt_count(shape, CountMode::Eq(m))).sum();
        if total != hook_length_count(shape) {
            bad.push(format!("exact-max counts do not sum to |SYT| for {shape}"));
        }
        (cases, bad)
    });
    // The two rearranged identities, exactly, over all frames with first row
    // and column at most 6 and every m up to one past the size.
    for l1 in 2..=6usize {
        for l2 in 2..=l1 {
            for h1 in 2..=6usize {
                for h2 in 2..=h1 {
                    let frame = Durfee2Frame::new(l1, l2, h1, h2).unwrap();
                    let n = frame.size() as u32;
                    for m in 0..=n + 1 {
                        cases += 1;
                        if !check_section5_identity_a(&frame, m) {
                            bad.push(format!(
                                "identity A fails for frame ({l1},{l2},{h1},{h2}), m = {m}"
                            ));
                        }
                        if !check_section5_identity_b(&frame, m) {
                            bad.push(format!(
                                "identity B fails for frame ({l1},{l2},{h1},{h2}), m = {m}"
                            ));
                        }
                    }
                }
            }
        }
    }
    (cases, bad)
}

/// Destandardization round-trips, run statistics, and the fiber census
/// (surjective always, injective exactly when the bound is at most the
/// number of rows).
fn suite_bijection(max_n: usize) -> (u64, Vec<String>) {
    sweep(max_n, |shape| {
        let mut cases = 0;
        let mut bad = Vec::new();
        let n = shape.size() as u32;
        let (_, hi) = qyt_max_entry_range(shape).unwrap();

        let mut runs_histogram: HashMap<u32, u64> = HashMap::new();
        for t in enumerate_syt(shape) {
            cases += 1;
            let d = destandardize(&t).unwrap();
            let back = restandardize(&d).unwrap();
            if back != t {
                bad.push(format!("restandardize(destandardize) != id on {shape}"));
                continue;
            }
            let runs = t.runs().unwrap().len() as u32;
            if d.max_entry().unwrap() != runs {
                bad.push(format!(
                    "destandardized max != run count on {shape} ({runs} runs)"
                ));
            }
            *runs_histogram.entry(runs).or_insert(0) += 1;
        }
        for q in enumerate_qyt(shape, CountMode::Le(n)) {
            cases += 1;
            let s = restandardize(&q).unwrap();
            if destandardize(&s).unwrap() != q {
                bad.push(format!("destandardize(restandardize) != id on {shape}"));
            }
        }
        // Standard fillings with m runs correspond to exact-max-m fillings.
        for m in 1..=n {
            cases += 1;
            let hist = BigUint::from(runs_histogram.get(&m).copied().unwrap_or(0));
            let direct = count_qyt_brute(shape, CountMode::Eq(m), None).unwrap();
            if hist != direct {
                bad.push(format!(
                    "run histogram {hist} != QYT count {direct} for {shape}, m = {m}"
                ));
            }
        }
        // Bounded counts collapse to the standard count past the range.
        cases += 1;
        if count_qyt_brute(shape, CountMode::Le(hi), None).unwrap() != hook_length_count(shape) {
            bad.push(format!("QYT_<= does not collapse to |SYT| for {shape}"));
        }
        // Fiber census stays desk-scale on sizes <= 7.
        if shape.size() <= 7 {
            for m in 1..=n {
                cases += 1;
                match verify_dst_fibers(shape, m, None) {
                    Ok(report) => {
                        let expect_injective = m as usize <= shape.len();
                        if !report.surjective || report.injective != expect_injective {
                            bad.push(format!("fiber report off for {shape}, m = {m}: {report:?}"));
                        }
                    }
                    Err(e) => bad.push(format!("fiber census failed for {shape}, m = {m}: {e}")),
                }
            }
        }
        (cases, bad)
    })
}

/// The conjugation symmetry: by explicit bijection on every shape up to
/// max_n, and as an exact algebraic identity over all small frames.
fn suite_symmetry(max_n: usize) -> (u64, Vec<String>) {
    let (mut cases, mut bad) = sweep(max_n, |shape| {
        let mut cases = 0;
        let mut bad = Vec::new();
        let n = shape.size() as u32;
        let conj = shape.conjugate();
        let (lo, hi) = qyt_max_entry_range(shape).unwrap();
        for m in lo..=hi {
            cases += 1;
            let source: Vec<Tableau> = enumerate_qyt(shape, CountMode::Eq(m)).collect();
            let mut images = Vec::new();
            for q in &source {
                let img = match symmetry_bijection(q) {
                    Ok(img) => img,
                    Err(e) => {
                        bad.push(format!("bijection failed on {shape}, m = {m}: {e}"));
                        continue;
                    }
                };
                let ok = img.shape() == &conj
                    && img.max_entry().unwrap() == n + 1 - m
                    && symmetry_bijection(&img).map(|b| b == *q).unwrap_or(false);
                if !ok {
                    bad.push(format!("bijection not involutive on {shape}, m = {m}"));
                }
                images.push(img);
            }
            images.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            images.dedup();
            let target = count_qyt_brute(&conj, CountMode::Eq(n + 1 - m), None).unwrap();
            if BigUint::from(images.len() as u64) != target || images.len() != source.len() {
                bad.push(format!(
                    "image of QYT_={m}({shape}) misses QYT_={}({conj})",
                    n + 1 - m
                ));
            }
        }
        (cases, bad)
    });
    // Algebraic form of the same symmetry, over all frames with entries <= 9.
    for l1 in 2..=9usize {
        for l2 in 2..=l1 {
            for h1 in 2..=9usize {
                for h2 in 2..=h1 {
                    let frame = Durfee2Frame::new(l1, l2, h1, h2).unwrap();
                    let n = frame.size() as u32;
                    for m in 0..=n + 1 {
                        cases += 1;
                        if !check_symmetry_identity(&frame, m) {
                            bad.push(format!(
                                "algebraic symmetry fails for frame ({l1},{l2},{h1},{h2}), m = {m}"
                            ));
                        }
                    }
                }
            }
        }
    }
    (cases, bad)
}

/// Schur polynomial expansions agree and the nonzero fundamental terms are
/// counted by bounded quasi-Yamanouchi fillings.
fn suite_schur(max_n: usize) -> (u64, Vec<String>) {
    sweep(max_n, |shape| {
        let mut cases = 0;
        let mut bad = Vec::new();
        for m in 1..=4usize {
            cases += 1;
            if schur_via_ssyt(shape, m) != schur_via_fundamental(shape, m) {
                bad.push(format!("Schur expansions differ for {shape}, m = {m}"));
            }
            let (nonzero, total) = nonzero_term_census(shape, m);
            if nonzero != qyt_count(shape, CountMode::Le(m as u32))
                || total != hook_length_count(shape)
            {
                bad.push(format!("census off for {shape}, m = {m}"));
            }
        }
        (cases, bad)
    })
}

/// The four-sum recurrence behind the Durfee-2 product formula, evaluated
/// with exhaustive counts on both sides.
fn suite_recurrence(max_n: usize) -> (u64, Vec<String>) {
    sweep(max_n, |shape| {
        let mut cases = 0;
        let mut bad = Vec::new();
        let Some(frame) = shape.durfee2_frame() else {
            return (0, bad);
        };
        if !(frame.lambda1() > frame.lambda2() && frame.h1() > frame.h2() && frame.h2() >= 3) {
            return (0, bad);
        }
        let (lo, hi) = qyt_max_entry_range(shape).unwrap();
        for m in lo..=hi {
            cases += 1;
            match check_durfee2_recurrence(&frame, m) {
                Ok(true) => {}
                Ok(false) => bad.push(format!("recurrence fails for {shape}, m = {m}")),
                Err(e) => bad.push(format!(
                    "recurrence check errored for {shape}, m = {m}: {e}"
                )),
            }
        }
        (cases, bad)
    })
}

type SuiteRunner = fn(usize) -> (u64, Vec<String>);

fn run_one(suite: Suite, max_n: Option<usize>) -> SuiteReport {
    let (name, default_n, runner): (&'static str, usize, SuiteRunner) = match suite {
        Suite::Formula => ("formula", 12, suite_formula),
        Suite::Bijection => ("bijection", 8, suite_bijection),
        Suite::Symmetry => ("symmetry", 8, suite_symmetry),
        Suite::Schur => ("schur", 6, suite_schur),
        Suite::Recurrence => ("recurrence", 10, suite_recurrence),
        Suite::All => unreachable!("expanded by caller"),
    };
    let max_n = max_n.unwrap_or(default_n);
    let start = Instant::now();
    let (cases, violations) = runner(max_n);
    for v in violations.iter().take(5) {
        eprintln!("violation: {v}");
    }
    SuiteReport {
        suite: name,
        max_n,
        cases,
        violations: violations.len() as u64,
        first_violation: violations.first().cloned(),
        elapsed_ms: start.elapsed().as_millis(),
    }
}

pub fn cmd_verify(suite: Suite, max_n: Option<usize>) -> ExitCode {
    let suites = match suite {
        Suite::All => vec![
            Suite::Formula,
            Suite::Bijection,
            Suite::Symmetry,
            Suite::Schur,
            Suite::Recurrence,
        ],
        s => vec![s],
    };
    let reports: Vec<SuiteReport> = suites.into_iter().map(|s| run_one(s, max_n)).collect();
    let ok = reports.iter().all(|r| r.violations == 0);
    for r in &reports {
        eprintln!(
            "{}: {} cases, {} violations, {} ms",
            r.suite, r.cases, r.violations, r.elapsed_ms
        );
    }
    println!(
        "{}",
        json!({
            "ok": ok,
            "suites": reports,
        })
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(super::EXIT_VIOLATION)
    }
}
