//! Acceptance suite: one test per shipped guarantee, each printing a PASS
//! line (visible with `--nocapture`). Every tolerance here is exact — counts
//! are integers and identities are checked with big-integer arithmetic — so
//! the only stated bounds are runtimes.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use qyt_core::bijection::{
    conjugate_syt, destandardize, restandardize, symmetry_bijection, verify_dst_fibers,
};
use qyt_core::factor::is_probable_prime;
use qyt_core::formula::{
    check_section5_identity_a, check_section5_identity_b, check_symmetry_identity,
    hook_length_count, qyt_count, qyt_count_durfee2,
};
use qyt_core::partition::partitions_of;
use qyt_core::schur::{nonzero_term_census, schur_via_fundamental, schur_via_ssyt};
use qyt_core::tableau::{
    count_qyt_brute, enumerate_qyt, enumerate_syt, qyt_max_entry_range, witness_for, witness_max,
    CountMode,
};
use qyt_core::{Cell, Durfee2Frame, Partition, Tableau};

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn t(rows: &[&[u32]]) -> Tableau {
    Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn finish(name: &str, start: Instant, bound: Option<Duration>) {
    let elapsed = start.elapsed();
    if let Some(bound) = bound {
        assert!(
            elapsed < bound,
            "{name} took {elapsed:?}, over the {bound:?} budget"
        );
    }
    println!("PASS {name} ({elapsed:?})");
}

/// Criterion 1: the n = 6 table printed by the CLI is byte-identical to the
/// checked-in golden file and carries exactly the published entries, in
/// under 10 seconds.
#[test]
fn criterion_01_table_of_six() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qyt"))
        .args(["table", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, include_str!("golden/table6.md"), "golden file drift");

    let expected: &[(&str, &[(usize, u64)])] = &[
        ("(6)", &[(1, 1)]),
        ("(5, 1)", &[(2, 5)]),
        ("(4, 2)", &[(2, 3), (3, 6)]),
        ("(4, 1, 1)", &[(3, 10)]),
        ("(3, 3)", &[(2, 1), (3, 3), (4, 1)]),
        ("(3, 2, 1)", &[(3, 8), (4, 8)]),
        ("(2, 2, 2)", &[(3, 1), (4, 3), (5, 1)]),
        ("(3, 1, 1, 1)", &[(4, 10)]),
        ("(2, 2, 1, 1)", &[(4, 6), (5, 3)]),
        ("(2, 1, 1, 1, 1)", &[(5, 5)]),
        ("(1, 1, 1, 1, 1, 1)", &[(6, 1)]),
    ];
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), expected.len(), "11 partitions of 6");
    for (line, (label, entries)) in rows.iter().zip(expected) {
        let cells: Vec<&str> = line.trim_matches('|').split('|').map(str::trim).collect();
        assert_eq!(&cells[0], label, "row order");
        for (m, cell) in cells.iter().enumerate().skip(1) {
            let want = entries
                .iter()
                .find(|(col, _)| *col == m)
                .map(|(_, v)| v.to_string())
                .unwrap_or_default();
            assert_eq!(*cell, want, "{label} at m = {m}");
        }
    }
    finish(
        "criterion 1: table of six",
        start,
        Some(Duration::from_secs(10)),
    );
}

/// Criterion 2: the two large-prime counts behind the no-product-formula
/// evidence, by brute force, in under 60 seconds.
#[test]
fn criterion_02_large_prime_counts() {
    let start = Instant::now();
    let a = count_qyt_brute(&p("3,3,3,3"), CountMode::Eq(6), None).unwrap();
    assert_eq!(a, big(113));
    assert!(is_probable_prime(&a));
    let b = count_qyt_brute(&p("3,3,3,2"), CountMode::Le(6), None).unwrap();
    assert_eq!(b, big(241));
    assert!(is_probable_prime(&b));
    for (shape, mode, expect) in [
        ("3,3,3,3", "--eq", "113 = 113 (prime)"),
        ("3,3,3,2", "--le", "241 = 241 (prime)"),
    ] {
        let out = Command::new(env!("CARGO_BIN_EXE_qyt"))
            .args(["primes", shape, mode, "6"])
            .output()
            .unwrap();
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), expect);
    }
    finish(
        "criterion 2: large prime evidence",
        start,
        Some(Duration::from_secs(60)),
    );
}

/// Criterion 3: the product formula equals the exhaustive count for every
/// Durfee-size-2 shape of at most 12 boxes and every feasible m, in under
/// 10 minutes single-threaded.
#[test]
fn criterion_03_product_formula_oracle_equivalence() {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=12 {
        for shape in partitions_of(n) {
            let Some(frame) = shape.durfee2_frame() else {
                continue;
            };
            let (lo, hi) = qyt_max_entry_range(&shape).unwrap();
            assert_eq!(lo as usize, frame.h1());
            for m in lo..=hi {
                let formula = qyt_count_durfee2(&frame, m);
                let oracle = count_qyt_brute(&shape, CountMode::Eq(m), None).unwrap();
                assert_eq!(formula, oracle, "{shape} m={m}");
                checked += 1;
            }
        }
    }
    assert!(checked > 400, "swept only {checked} pairs");
    finish(
        "criterion 3: formula = oracle on Durfee-2 shapes",
        start,
        Some(Duration::from_secs(600)),
    );
}

/// Criterion 4: the conjugation symmetry, both as an explicit bijection
/// round-trip on every shape of at most 8 boxes and as an exact algebraic
/// identity on every frame with entries at most 9.
#[test]
fn criterion_04_conjugation_symmetry() {
    let start = Instant::now();
    for n in 1..=8usize {
        for shape in partitions_of(n) {
            let conj = shape.conjugate();
            let (lo, hi) = qyt_max_entry_range(&shape).unwrap();
            for m in lo..=hi {
                let source: Vec<Tableau> = enumerate_qyt(&shape, CountMode::Eq(m)).collect();
                let mut images = Vec::new();
                for q in &source {
                    let img = symmetry_bijection(q).unwrap();
                    assert_eq!(img.shape(), &conj);
                    assert_eq!(img.max_entry().unwrap() as usize, n + 1 - m as usize);
                    assert_eq!(symmetry_bijection(&img).unwrap(), *q, "round trip");
                    images.push(img);
                }
                images.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
                images.dedup();
                assert_eq!(images.len(), source.len(), "injective on {shape} m={m}");
                let target =
                    count_qyt_brute(&conj, CountMode::Eq((n + 1) as u32 - m), None).unwrap();
                assert_eq!(big(images.len() as u64), target, "{shape} m={m}");
            }
        }
    }
    for l1 in 2..=9usize {
        for l2 in 2..=l1 {
            for h1 in 2..=9usize {
                for h2 in 2..=h1 {
                    let frame = Durfee2Frame::new(l1, l2, h1, h2).unwrap();
                    let hi = (l2 + h1 + h2 - 3) as u32;
                    for m in (h1 as u32)..=hi {
                        assert!(
                            check_symmetry_identity(&frame, m),
                            "frame ({l1},{l2},{h1},{h2}) m={m}"
                        );
                    }
                }
            }
        }
    }
    finish("criterion 4: conjugation symmetry", start, None);
}

/// Criterion 5: the feasible range of the largest entry is sharp on every
/// shape of at most 10 boxes, and the witness construction produces a valid
/// member at every feasible m.
#[test]
fn criterion_05_feasible_range_sharpness() {
    let start = Instant::now();
    for n in 1..=10usize {
        for shape in partitions_of(n) {
            let (lo, hi) = qyt_max_entry_range(&shape).unwrap();
            for m in 1..=n as u32 {
                let count = count_qyt_brute(&shape, CountMode::Eq(m), None).unwrap();
                assert_eq!(
                    count > big(0),
                    (lo..=hi).contains(&m),
                    "{shape} m={m} count={count}"
                );
            }
            // A largest value above n would need more than n distinct values.
            for m in lo..=hi {
                let w = witness_for(&shape, m).unwrap();
                assert!(w.is_qyt(), "{shape} m={m}");
                assert_eq!(w.max_entry().unwrap(), m, "{shape} m={m}");
            }
        }
    }
    finish("criterion 5: feasible range sharpness", start, None);
}

/// Criterion 6: destandardization is surjective onto the bounded
/// quasi-Yamanouchi fillings for every shape of at most 7 boxes and every
/// bound m <= n, and injective exactly when m is at most the number of rows.
#[test]
fn criterion_06_destandardization_fibers() {
    let start = Instant::now();
    for n in 1..=7usize {
        for shape in partitions_of(n) {
            for m in 1..=n as u32 {
                let report = verify_dst_fibers(&shape, m, None).unwrap();
                assert!(report.surjective, "{shape} m={m}: {report:?}");
                assert_eq!(
                    report.injective,
                    m as usize <= shape.len(),
                    "{shape} m={m}: {report:?}"
                );
            }
        }
    }
    finish("criterion 6: destandardization fibers", start, None);
}

/// Criterion 7: destandardization and restandardization invert each other on
/// every shape of at most 8 boxes, and standard fillings with m runs are
/// equinumerous with exact-max-m quasi-Yamanouchi fillings.
#[test]
fn criterion_07_roundtrips_and_run_partition() {
    let start = Instant::now();
    for n in 1..=8usize {
        for shape in partitions_of(n) {
            let mut runs_histogram = vec![0u64; n + 2];
            for syt in enumerate_syt(&shape) {
                let d = destandardize(&syt).unwrap();
                assert_eq!(restandardize(&d).unwrap(), syt);
                runs_histogram[syt.runs().unwrap().len()] += 1;
            }
            for q in enumerate_qyt(&shape, CountMode::Le(n as u32)) {
                assert_eq!(destandardize(&restandardize(&q).unwrap()).unwrap(), q);
            }
            for (m, &with_m_runs) in runs_histogram.iter().enumerate().skip(1) {
                assert_eq!(
                    big(with_m_runs),
                    count_qyt_brute(&shape, CountMode::Eq(m as u32), None).unwrap(),
                    "{shape} m={m}"
                );
            }
        }
    }
    finish("criterion 7: round trips and run partition", start, None);
}

/// Criterion 8: both rearranged identities hold exactly on every frame with
/// first row and first column at most 6, for every m (vacuously outside the
/// feasible range).
#[test]
fn criterion_08_rearranged_identities() {
    let start = Instant::now();
    for l1 in 2..=6usize {
        for l2 in 2..=l1 {
            for h1 in 2..=6usize {
                for h2 in 2..=h1 {
                    let frame = Durfee2Frame::new(l1, l2, h1, h2).unwrap();
                    let n = frame.size() as u32;
                    for m in 0..=n + 2 {
                        assert!(
                            check_section5_identity_a(&frame, m),
                            "A at ({l1},{l2},{h1},{h2}) m={m}"
                        );
                        assert!(
                            check_section5_identity_b(&frame, m),
                            "B at ({l1},{l2},{h1},{h2}) m={m}"
                        );
                    }
                }
            }
        }
    }
    finish("criterion 8: rearranged identities", start, None);
}

/// Criterion 9: the two Schur expansions agree as exact polynomials for
/// every shape of at most 6 boxes in up to 4 variables, with the nonzero
/// fundamental terms counted by bounded quasi-Yamanouchi fillings; under 2
/// minutes.
#[test]
fn criterion_09_schur_expansions() {
    let start = Instant::now();
    for n in 1..=6usize {
        for shape in partitions_of(n) {
            for m in 1..=4usize {
                assert_eq!(
                    schur_via_ssyt(&shape, m),
                    schur_via_fundamental(&shape, m),
                    "{shape} m={m}"
                );
                let (nonzero, total) = nonzero_term_census(&shape, m);
                assert_eq!(
                    nonzero,
                    qyt_count(&shape, CountMode::Le(m as u32)),
                    "{shape} m={m}"
                );
                assert_eq!(total, hook_length_count(&shape), "{shape}");
            }
        }
    }
    finish(
        "criterion 9: Schur expansions",
        start,
        Some(Duration::from_secs(120)),
    );
}

/// Criterion 10: the worked examples — hooks and contents of (4,2,1), the
/// Durfee size of (6,5,3,2), the five-run standard filling, the
/// destandardization pair, and both witness constructions — reproduced
/// exactly.
#[test]
fn criterion_10_worked_examples() {
    let start = Instant::now();

    let shape = p("4,2,1");
    let hooks: Vec<Vec<usize>> = (1..=3)
        .map(|row| {
            (1..=shape.row_len(row))
                .map(|col| shape.hook_length(Cell::new(col, row)).unwrap())
                .collect()
        })
        .collect();
    assert_eq!(hooks, vec![vec![6, 4, 2, 1], vec![3, 1], vec![1]]);
    let contents: Vec<Vec<i64>> = (1..=3)
        .map(|row| {
            (1..=shape.row_len(row))
                .map(|col| Cell::new(col, row).content())
                .collect()
        })
        .collect();
    assert_eq!(contents, vec![vec![0, 1, 2, 3], vec![-1, 0], vec![-2]]);

    assert_eq!(p("6,5,3,2").durfee_size(), 3);

    let five_runs = t(&[&[1, 2, 3, 6, 8], &[4, 5, 7, 11], &[9, 10, 12]]);
    assert_eq!(five_runs.descent_set().unwrap().elements(), &[3, 6, 8, 11]);
    assert_eq!(five_runs.runs().unwrap().len(), 5);

    let syt = t(&[&[1, 2, 5, 8], &[3, 4, 7], &[6, 9]]);
    let dst = t(&[&[1, 1, 2, 3], &[2, 2, 3], &[3, 4]]);
    assert_eq!(destandardize(&syt).unwrap(), dst);
    assert_eq!(restandardize(&dst).unwrap(), syt);
    assert_eq!(conjugate_syt(&conjugate_syt(&syt).unwrap()).unwrap(), syt);

    assert_eq!(
        witness_max(&p("4,4,3")).unwrap(),
        t(&[&[1, 3, 5, 7], &[2, 4, 6, 8], &[3, 5, 7]])
    );
    assert_eq!(
        witness_for(&p("5,5,4,2"), 8).unwrap(),
        t(&[&[1, 4, 6, 6, 6], &[2, 5, 7, 7, 7], &[3, 6, 8, 8], &[4, 7]])
    );

    finish("criterion 10: worked examples", start, None);
}
