//! Exact closed-form counting.
//!
//! - [`hook_length_count`]: number of standard fillings, n! / prod h(u)
//! - [`hook_content_count`]: number of semistandard fillings with entries at
//!   most m, prod (m + c(u)) / h(u)
//! - [`qyt_count_durfee2`]: the product formula for quasi-Yamanouchi fillings
//!   of a Durfee-size-2 shape with largest value exactly m
//! - [`qyt_count_durfee1`]: hook shapes, as a difference of hook-content
//!   counts
//! - [`qyt_count`]: dispatcher preferring the closed forms and falling back
//!   to exhaustive enumeration
//! - exact identity checks backing the verification suites
//! - [`prime_evidence`]: count plus full factorization, the evidence that no
//!   product formula can exist beyond Durfee size 2
//!
//! Products are accumulated as big integers and divided once at the end; an
//! inexact division panics, since it can only mean an expression was
//! assembled wrong.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{factorize, is_probable_prime};
use crate::partition::{Durfee2Frame, Partition};
use crate::tableau::{
    count_qyt_brute, count_qyt_max_beyond_column, qyt_max_entry_range, CountMode,
};

/// Binomial coefficient with the convention C(a, b) = 0 whenever b < 0 or
/// b > a. Nonzero only for 0 <= b <= a.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut res = BigUint::one();
    for i in 0..b {
        res = res * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    res
}

pub fn factorial(n: u64) -> BigUint {
    let mut res = BigUint::one();
    for i in 2..=n {
        res *= BigUint::from(i);
    }
    res
}

fn exact_div(numer: BigUint, denom: &BigUint) -> BigUint {
    let (q, r) = numer.div_rem(denom);
    assert!(
        r.is_zero(),
        "inexact division while evaluating a closed-form count"
    );
    q
}

/// Number of semistandard fillings of `shape` with entries at most `m`:
/// the product over cells of (m + content) / hook. Zero when m is smaller
/// than the number of rows.
pub fn hook_content_count(shape: &Partition, m: u32) -> BigUint {
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for cell in shape.cells() {
        let factor = m as i64 + cell.content();
        if factor <= 0 {
            return BigUint::zero();
        }
        numer *= BigUint::from(factor as u64);
        denom *= BigUint::from(shape.hook_length(cell).unwrap());
    }
    exact_div(numer, &denom)
}

/// Number of standard fillings of `shape`: n! over the product of the hooks.
pub fn hook_length_count(shape: &Partition) -> BigUint {
    let numer = factorial(shape.size() as u64);
    let mut denom = BigUint::one();
    for cell in shape.cells() {
        denom *= BigUint::from(shape.hook_length(cell).unwrap());
    }
    exact_div(numer, &denom)
}

/// The Durfee-size-2 product, evaluated exactly for arbitrary parameters:
///
/// ```text
/// (l1-l2+1)/(m-h2+1) * C(l1+h1-2, m-h2) * C(l2+h1-3, m-h2) * C(m-h2, m-h1)
///                    * C(l2+h2-4, h2-2) * C(l1+h2-3, h2-2) / C(h1-1, h2-2)
/// ```
///
/// Outside h1 <= m <= l2+h1+h2-3 the count is zero (the binomial convention
/// makes the numerator vanish there; returning early also keeps the
/// denominator positive).
fn durfee2_product(l1: i64, l2: i64, h1: i64, h2: i64, m: i64) -> BigUint {
    let n = l1 + l2 + h1 + h2 - 4;
    if m < h1 || m > n - (l1 - 1) {
        return BigUint::zero();
    }
    let numer = BigUint::from((l1 - l2 + 1) as u64)
        * binomial(l1 + h1 - 2, m - h2)
        * binomial(l2 + h1 - 3, m - h2)
        * binomial(m - h2, m - h1)
        * binomial(l2 + h2 - 4, h2 - 2)
        * binomial(l1 + h2 - 3, h2 - 2);
    let denom = BigUint::from((m - h2 + 1) as u64) * binomial(h1 - 1, h2 - 2);
    exact_div(numer, &denom)
}

/// Number of quasi-Yamanouchi fillings with largest value exactly `m` of the
/// Durfee-size-2 shape described by `frame`, by the closed product formula.
pub fn qyt_count_durfee2(frame: &Durfee2Frame, m: u32) -> BigUint {
    durfee2_product(
        frame.lambda1() as i64,
        frame.lambda2() as i64,
        frame.h1() as i64,
        frame.h2() as i64,
        m as i64,
    )
}

/// Number of quasi-Yamanouchi fillings with largest value exactly `m` of a
/// Durfee-size-1 (hook) shape. For hooks the quasi-Yamanouchi fillings are
/// exactly the semistandard fillings with entries at most h1 = len(shape), so
/// the count is a difference of hook-content counts and is supported on the
/// single point m = h1.
pub fn qyt_count_durfee1(shape: &Partition, m: u32) -> Result<BigUint> {
    let actual = shape.durfee_size();
    if actual != 1 {
        return Err(Error::WrongDurfeeSize {
            shape: shape.to_string(),
            expected: 1,
            actual,
        });
    }
    let lo = shape.len() as u32;
    let hi = lo; // first column height equals the row count on a hook
    if m < lo || m > hi {
        return Ok(BigUint::zero());
    }
    let at_m = hook_content_count(shape, m);
    let below = if m == 0 {
        BigUint::zero()
    } else {
        hook_content_count(shape, m - 1)
    };
    Ok(at_m - below)
}

/// Which evaluation path produced a count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    EmptyShape,
    Durfee1Formula,
    Durfee2Formula,
    BruteForce,
}

impl CountMethod {
    pub fn label(self) -> &'static str {
        match self {
            CountMethod::EmptyShape => "empty",
            CountMethod::Durfee1Formula => "durfee1-formula",
            CountMethod::Durfee2Formula => "durfee2-formula",
            CountMethod::BruteForce => "brute-force",
        }
    }
}

/// Count quasi-Yamanouchi fillings, dispatching to the closed forms for
/// Durfee size at most 2 and to exhaustive enumeration otherwise. `Le` mode
/// sums the exact-max counts over the feasible range capped at m.
pub fn qyt_count(shape: &Partition, mode: CountMode) -> BigUint {
    qyt_count_with_method(shape, mode).0
}

pub fn qyt_count_with_method(shape: &Partition, mode: CountMode) -> (BigUint, CountMethod) {
    if shape.is_empty() {
        // The empty shape has exactly one (empty) filling with no entries.
        let count = match mode {
            CountMode::Eq(0) | CountMode::Le(_) => BigUint::one(),
            CountMode::Eq(_) => BigUint::zero(),
        };
        return (count, CountMethod::EmptyShape);
    }
    let durfee = shape.durfee_size();
    let (lo, hi) = qyt_max_entry_range(shape).unwrap();
    match durfee {
        1 => {
            let count = match mode {
                CountMode::Eq(m) => qyt_count_durfee1(shape, m).unwrap(),
                CountMode::Le(m) => (lo..=hi.min(m))
                    .map(|k| qyt_count_durfee1(shape, k).unwrap())
                    .sum(),
            };
            (count, CountMethod::Durfee1Formula)
        }
        2 => {
            let frame = shape.durfee2_frame().unwrap();
            let count = match mode {
                CountMode::Eq(m) => qyt_count_durfee2(&frame, m),
                CountMode::Le(m) => (lo..=hi.min(m)).map(|k| qyt_count_durfee2(&frame, k)).sum(),
            };
            (count, CountMethod::Durfee2Formula)
        }
        _ => {
            let count = match mode {
                CountMode::Eq(m) => {
                    if m > hi {
                        // No filling can exceed the feasible maximum.
                        BigUint::zero()
                    } else {
                        count_qyt_brute(shape, CountMode::Eq(m), None).unwrap()
                    }
                }
                CountMode::Le(m) => count_qyt_brute(shape, CountMode::Le(m.min(hi)), None).unwrap(),
            };
            (count, CountMethod::BruteForce)
        }
    }
}

/// The algebraic symmetry of the Durfee-2 product: the formula at (frame, m)
/// equals the formula at the conjugate frame and m' = n + 1 - m. Both sides
/// are evaluated exactly; outside the feasible range both vanish.
pub fn check_symmetry_identity(frame: &Durfee2Frame, m: u32) -> bool {
    let n = frame.size() as i64;
    let m = m as i64;
    let conj = frame.conjugate();
    let lhs = durfee2_product(
        frame.lambda1() as i64,
        frame.lambda2() as i64,
        frame.h1() as i64,
        frame.h2() as i64,
        m,
    );
    let rhs = durfee2_product(
        conj.lambda1() as i64,
        conj.lambda2() as i64,
        conj.h1() as i64,
        conj.h2() as i64,
        n + 1 - m,
    );
    lhs == rhs
}

/// First rearranged identity: C(m-h2+1, h1-h2+1) * QYT_{=m}(shape) equals
/// C(l1+h2-2, m-h1) * C(l2+h2-3, m-h1) * SSYT_{h1}(shape), exactly. Both
/// sides vanish outside the feasible range of m.
pub fn check_section5_identity_a(frame: &Durfee2Frame, m: u32) -> bool {
    let (l1, l2, h1, h2) = frame_i64(frame);
    let m = m as i64;
    let lhs = binomial(m - h2 + 1, h1 - h2 + 1) * qyt_count_durfee2(frame, m as u32);
    let rhs = binomial(l1 + h2 - 2, m - h1)
        * binomial(l2 + h2 - 3, m - h1)
        * hook_content_count(&frame.partition(), h1 as u32);
    lhs == rhs
}

/// Second rearranged identity: C(m+l1-1, m-h1) * C(m+l2-2, m-h1) *
/// QYT_{=m}(shape) equals C(l1+h2-2, m-h1) * C(l2+h2-3, m-h1) *
/// SSYT_m(shape), exactly.
pub fn check_section5_identity_b(frame: &Durfee2Frame, m: u32) -> bool {
    let (l1, l2, h1, h2) = frame_i64(frame);
    let mi = m as i64;
    let lhs = binomial(mi + l1 - 1, mi - h1)
        * binomial(mi + l2 - 2, mi - h1)
        * qyt_count_durfee2(frame, m);
    let rhs = binomial(l1 + h2 - 2, mi - h1)
        * binomial(l2 + h2 - 3, mi - h1)
        * hook_content_count(&frame.partition(), m);
    lhs == rhs
}

fn frame_i64(frame: &Durfee2Frame) -> (i64, i64, i64, i64) {
    (
        frame.lambda1() as i64,
        frame.lambda2() as i64,
        frame.h1() as i64,
        frame.h2() as i64,
    )
}

/// The four-sum recurrence from the inductive proof of the Durfee-2 formula,
/// checked against exhaustive counts. Requires lambda1 > lambda2 and
/// h1 > h2 >= 3 so that every shape appearing on the right-hand side is a
/// valid Durfee-2 shape. The A function counts fillings where some m appears
/// anywhere but the first column, the B function anywhere but the first two.
pub fn check_durfee2_recurrence(frame: &Durfee2Frame, m: u32) -> Result<bool> {
    let (l1, l2, h1, h2) = (frame.lambda1(), frame.lambda2(), frame.h1(), frame.h2());
    assert!(
        l1 > l2 && h1 > h2 && h2 >= 3,
        "recurrence requires lambda1 > lambda2 and h1 > h2 >= 3"
    );
    let lhs = count_qyt_brute(&frame.partition(), CountMode::Eq(m), None)?;
    let sub_shape = |dl1: usize, dl2: usize, nh1: usize, nh2: usize| -> Partition {
        Durfee2Frame::new(l1 - dl1, l2 - dl2, nh1, nh2)
            .unwrap()
            .partition()
    };
    let mut rhs = BigUint::zero();
    for i in 0..=(l2 - 2) {
        for j in 0..=(l1 - l2) {
            // m on top of column 1 only.
            rhs += count_qyt_brute(&sub_shape(j, i, h1 - 1, h2), CountMode::Eq(m - 1), None)?;
            // m on top of both columns.
            rhs += count_qyt_brute(&sub_shape(j, i, h1 - 1, h2 - 1), CountMode::Eq(m - 1), None)?;
            // m on top of column 2 only; the remaining m-1 must already sit
            // outside column 1.
            rhs += count_qyt_max_beyond_column(&sub_shape(j, i, h1, h2 - 1), m - 1, 1, None)?;
            // m in neither of the first two columns; forced onto the end of
            // the second row, with m-1 outside the first two columns.
            if i >= 1 {
                rhs += count_qyt_max_beyond_column(&sub_shape(j, i, h1, h2), m - 1, 2, None)?;
            }
        }
    }
    Ok(lhs == rhs)
}

/// One prime power in a factorization report.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeFactor {
    pub prime: String,
    pub exponent: u32,
}

/// A count together with its full prime factorization.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeEvidence {
    pub shape: String,
    pub mode: String,
    pub m: u32,
    pub count: String,
    pub is_prime: bool,
    pub factors: Vec<PrimeFactor>,
    pub largest_prime: Option<String>,
}

/// Compute a quasi-Yamanouchi count by the best available method and report
/// its full prime factorization and largest prime factor.
pub fn prime_evidence(shape: &Partition, mode: CountMode) -> PrimeEvidence {
    let count = qyt_count(shape, mode);
    let factors = factorize(&count);
    let largest_prime = factors.last().map(|(p, _)| p.to_string());
    PrimeEvidence {
        shape: shape.to_string(),
        mode: mode.label().to_string(),
        m: mode.bound(),
        count: count.to_string(),
        is_prime: is_probable_prime(&count),
        factors: factors
            .into_iter()
            .map(|(p, e)| PrimeFactor {
                prime: p.to_string(),
                exponent: e,
            })
            .collect(),
        largest_prime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::tableau::enumerate_ssyt;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn frame_of(text: &str) -> Durfee2Frame {
        p(text).durfee2_frame().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(-2, 0), big(0));
        assert_eq!(binomial(-2, -3), big(0));
        assert_eq!(binomial(50, 25), "126410606437752".parse().unwrap());
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(hook_content_count(&p("2,2"), 3), big(6));
        assert_eq!(hook_content_count(&p("3,2"), 1), big(0));
        assert_eq!(hook_content_count(&p("4,2,1"), 3), big(15));
        assert_eq!(
            hook_content_count(&p("4,2,1"), 3),
            big(enumerate_ssyt(&p("4,2,1"), 3).count() as u64)
        );
        assert_eq!(hook_content_count(&p("3,2"), 5), big(175));
        assert_eq!(hook_content_count(&Partition::empty(), 0), big(1));
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(hook_length_count(&p("3,2")), big(5));
        assert_eq!(hook_length_count(&p("6")), big(1));
        assert_eq!(hook_length_count(&p("4,2,1")), big(35));
        assert_eq!(hook_length_count(&p("3,2,2")), big(21));
        assert_eq!(hook_length_count(&Partition::empty()), big(1));
    }

    #[test]
    fn durfee2_formula_against_table_of_six() {
        // Rows of the table of counts for partitions of 6.
        assert_eq!(qyt_count_durfee2(&frame_of("4,2"), 2), big(3));
        assert_eq!(qyt_count_durfee2(&frame_of("4,2"), 3), big(6));
        assert_eq!(qyt_count_durfee2(&frame_of("3,3"), 2), big(1));
        assert_eq!(qyt_count_durfee2(&frame_of("3,3"), 3), big(3));
        assert_eq!(qyt_count_durfee2(&frame_of("3,3"), 4), big(1));
        assert_eq!(qyt_count_durfee2(&frame_of("3,2,1"), 3), big(8));
        assert_eq!(qyt_count_durfee2(&frame_of("3,2,1"), 4), big(8));
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,2"), 3), big(1));
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,2"), 4), big(3));
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,2"), 5), big(1));
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,1,1"), 4), big(6));
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,1,1"), 5), big(3));
        // Shape (2,2,1), from the enumerated figure.
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,1"), 3), big(3));
        assert_eq!(qyt_count_durfee2(&frame_of("2,2,1"), 4), big(2));
        // Outside the feasible range.
        assert_eq!(qyt_count_durfee2(&frame_of("4,2"), 1), big(0));
        assert_eq!(qyt_count_durfee2(&frame_of("4,2"), 4), big(0));
    }

    #[test]
    fn durfee2_formula_matches_brute_force_spot() {
        for (shape, m, expect) in [
            ("3,2,2", 3, 3u64),
            ("3,2,2", 4, 12),
            ("3,2,2", 5, 6),
            ("3,3,1", 4, 12),
            ("3,2,2,1", 5, 40),
        ] {
            assert_eq!(qyt_count_durfee2(&frame_of(shape), m), big(expect));
        }
    }

    #[test]
    fn durfee1_formula_examples() {
        assert_eq!(qyt_count_durfee1(&p("5,1"), 2).unwrap(), big(5));
        assert_eq!(qyt_count_durfee1(&p("4,1,1"), 3).unwrap(), big(10));
        assert_eq!(qyt_count_durfee1(&p("6"), 1).unwrap(), big(1));
        assert_eq!(qyt_count_durfee1(&p("5,1"), 3).unwrap(), big(0));
        assert_eq!(qyt_count_durfee1(&p("5,1"), 1).unwrap(), big(0));
        assert!(matches!(
            qyt_count_durfee1(&p("2,2"), 2),
            Err(Error::WrongDurfeeSize { .. })
        ));
    }

    #[test]
    fn dispatcher_examples() {
        let (c, method) = qyt_count_with_method(&p("3,3,3,3"), CountMode::Eq(6));
        assert_eq!(c, big(113));
        assert_eq!(method, CountMethod::BruteForce);

        let (c, method) = qyt_count_with_method(&p("3,3"), CountMode::Le(10));
        assert_eq!(c, big(5));
        assert_eq!(c, hook_length_count(&p("3,3")));
        assert_eq!(method, CountMethod::Durfee2Formula);

        let (c, method) = qyt_count_with_method(&p("1,1,1,1,1,1"), CountMode::Eq(6));
        assert_eq!(c, big(1));
        assert_eq!(method, CountMethod::Durfee1Formula);

        assert_eq!(qyt_count(&p("4,2"), CountMode::Le(3)), big(9));
        assert_eq!(qyt_count(&Partition::empty(), CountMode::Eq(0)), big(1));
        assert_eq!(qyt_count(&Partition::empty(), CountMode::Eq(2)), big(0));
        assert_eq!(qyt_count(&Partition::empty(), CountMode::Le(7)), big(1));
    }

    #[test]
    fn le_mode_collapses_to_standard_count() {
        for shape in ["3,3", "4,2,1", "3,3,3", "2,2,1"] {
            let shape = p(shape);
            let n = shape.size() as u32;
            assert_eq!(
                qyt_count(&shape, CountMode::Le(n)),
                hook_length_count(&shape),
                "{shape}"
            );
        }
    }

    #[test]
    fn symmetry_identity_examples() {
        let f = Durfee2Frame::new(2, 2, 2, 2).unwrap();
        for m in 2..=3 {
            assert!(check_symmetry_identity(&f, m));
        }
        // (4,2) at m=3 pairs with (2,2,1,1) at m'=4; both equal 6.
        let f42 = frame_of("4,2");
        assert!(check_symmetry_identity(&f42, 3));
        assert_eq!(qyt_count_durfee2(&f42, 3), big(6));
        assert_eq!(qyt_count_durfee2(&f42.conjugate(), 4), big(6));
    }

    #[test]
    fn symmetry_identity_sweep() {
        for l1 in 2..=6 {
            for l2 in 2..=l1 {
                for h1 in 2..=6 {
                    for h2 in 2..=h1 {
                        let f = Durfee2Frame::new(l1, l2, h1, h2).unwrap();
                        let n = f.size() as u32;
                        for m in 0..=n + 1 {
                            assert!(
                                check_symmetry_identity(&f, m),
                                "frame ({l1},{l2},{h1},{h2}) m={m}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn section5_identities_examples() {
        let f = frame_of("2,2,1");
        assert!(check_section5_identity_a(&f, 3));
        assert!(check_section5_identity_a(&f, 0));
        assert!(check_section5_identity_a(&f, 9));
        let f33 = frame_of("3,3");
        assert!(check_section5_identity_b(&f33, 3));
        assert!(check_section5_identity_b(&f33, 2));
    }

    #[test]
    fn boundary_cases_reduce_to_hook_content() {
        // At the smallest feasible m the product equals the bounded
        // semistandard count; at the largest, the bounded count of the
        // conjugate with bound lambda1.
        for shape in ["4,2", "3,3", "3,2,1", "2,2,2", "6,4,2,2,1", "4,3,2,2"] {
            let shape = p(shape);
            let f = shape.durfee2_frame().unwrap();
            let n = shape.size() as u32;
            let h1 = f.h1() as u32;
            let l1 = f.lambda1() as u32;
            assert_eq!(
                qyt_count_durfee2(&f, h1),
                hook_content_count(&shape, h1),
                "{shape} at min m"
            );
            assert_eq!(
                qyt_count_durfee2(&f, n - (l1 - 1)),
                hook_content_count(&shape.conjugate(), l1),
                "{shape} at max m"
            );
        }
    }

    #[test]
    fn recurrence_spot_check() {
        // (3,2,2,1) has frame (3,2,4,3); hand-checked values.
        let f = frame_of("3,2,2,1");
        for m in 4..=6 {
            assert!(check_durfee2_recurrence(&f, m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn eq_counts_partition_standard_count() {
        for n in 1..=9 {
            for shape in partitions_of(n) {
                let total: BigUint = (1..=n as u32)
                    .map(|m| qyt_count(&shape, CountMode::Eq(m)))
                    .sum();
                assert_eq!(total, hook_length_count(&shape), "{shape}");
            }
        }
    }

    #[test]
    fn prime_evidence_examples() {
        let e = prime_evidence(&p("3,3,3,3"), CountMode::Eq(6));
        assert_eq!(e.count, "113");
        assert!(e.is_prime);
        assert_eq!(e.largest_prime.as_deref(), Some("113"));

        let e = prime_evidence(&p("3,3,3,2"), CountMode::Le(6));
        assert_eq!(e.count, "241");
        assert!(e.is_prime);

        let e = prime_evidence(&p("2,2"), CountMode::Eq(2));
        assert_eq!(e.count, "1");
        assert!(!e.is_prime);
        assert!(e.factors.is_empty());
        assert!(e.largest_prime.is_none());
    }
}
