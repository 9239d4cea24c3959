//! The destandardization map, its inverse on quasi-Yamanouchi fillings,
//! conjugation of standard fillings, and the symmetry bijection
//! QYT_{=m}(shape) <-> QYT_{=(n+1)-m}(conjugate shape) they compose to.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::hook_content_count;
use crate::partition::Partition;
use crate::tableau::{enumerate_qyt, enumerate_ssyt, CountMode, Tableau};
use num_bigint::BigUint;
use std::collections::HashMap;

/// Destandardize a semistandard filling: while the leftmost i lies strictly
/// right of the rightmost i-1, or no i-1 is present, decrement every i to
/// i-1. The fixpoint is quasi-Yamanouchi, and the map is idempotent.
pub fn destandardize(t: &Tableau) -> Result<Tableau> {
    if !t.is_ssyt() {
        return Err(Error::NotSemistandard);
    }
    if t.is_empty() {
        return Ok(t.clone());
    }
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    loop {
        let mut changed = false;
        let max = *rows.iter().flatten().max().unwrap() as usize;
        let mut min_col = vec![0usize; max + 1];
        let mut max_col = vec![0usize; max + 1];
        for row in &rows {
            for (c, &v) in row.iter().enumerate() {
                let v = v as usize;
                let col = c + 1;
                if min_col[v] == 0 || col < min_col[v] {
                    min_col[v] = col;
                }
                if col > max_col[v] {
                    max_col[v] = col;
                }
            }
        }
        for i in 2..=max {
            if min_col[i] == 0 {
                continue;
            }
            if max_col[i - 1] == 0 || min_col[i] > max_col[i - 1] {
                for row in rows.iter_mut() {
                    for v in row.iter_mut() {
                        if *v == i as u32 {
                            *v -= 1;
                        }
                    }
                }
                changed = true;
                break; // occurrence maps are stale after a decrement
            }
        }
        if !changed {
            break;
        }
    }
    let out = Tableau::from_rows(rows)?;
    debug_assert!(out.is_qyt());
    Ok(out)
}

/// Invert destandardization on a quasi-Yamanouchi filling: visit the boxes of
/// each value in increasing value order, left to right within a value, and
/// relabel the k-th visited box with k. The result is standard, and its runs
/// are the value classes of the input.
pub fn restandardize(q: &Tableau) -> Result<Tableau> {
    if !q.is_qyt() {
        return Err(Error::NotQuasiYamanouchi);
    }
    // (value, col) is unique: a value cannot repeat within a column.
    let mut order: Vec<(u32, usize, usize)> = Vec::with_capacity(q.size());
    for (r, row) in q.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            order.push((v, c, r));
        }
    }
    order.sort_unstable_by_key(|&(v, c, _)| (v, c));
    let mut rows: Vec<Vec<u32>> = q.rows().iter().map(|r| vec![0; r.len()]).collect();
    for (k, &(_, c, r)) in order.iter().enumerate() {
        rows[r][c] = (k + 1) as u32;
    }
    let out = Tableau::from_rows(rows)?;
    debug_assert!(out.is_syt());
    Ok(out)
}

/// Transpose a standard filling onto the conjugate shape. The descent set of
/// the result is the complement of the input's descent set in {1..n-1}.
pub fn conjugate_syt(t: &Tableau) -> Result<Tableau> {
    if !t.is_syt() {
        return Err(Error::NotStandard);
    }
    let conj = t.shape().conjugate();
    let rows: Vec<Vec<u32>> = (0..conj.len())
        .map(|c| {
            (0..conj.parts()[c])
                .map(|r| t.rows()[r][c])
                .collect::<Vec<u32>>()
        })
        .collect();
    Tableau::from_rows(rows)
}

/// The symmetry bijection: destandardize(conjugate(restandardize(q))). Sends
/// a quasi-Yamanouchi filling of shape lambda with largest value m to one of
/// the conjugate shape with largest value (n+1)-m, bijectively.
pub fn symmetry_bijection(q: &Tableau) -> Result<Tableau> {
    destandardize(&conjugate_syt(&restandardize(q)?)?)
}

/// Exhaustive fiber census of destandardization over SSYT_m(shape).
#[derive(Clone, Debug, Serialize)]
pub struct DstFiberReport {
    pub shape: String,
    pub m: u32,
    pub ssyt_count: u64,
    pub qyt_count: u64,
    pub surjective: bool,
    pub injective: bool,
    pub max_fiber_size: u64,
}

/// Destandardize every member of SSYT_m(shape) and report whether the map is
/// surjective onto QYT_{<=m}(shape) and injective. `budget` caps the
/// exhaustive search by |SSYT_m(shape)| (default 10^6), computed up front by
/// the hook-content formula.
pub fn verify_dst_fibers(shape: &Partition, m: u32, budget: Option<u64>) -> Result<DstFiberReport> {
    let budget = budget.unwrap_or(1_000_000);
    if hook_content_count(shape, m) > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { budget });
    }
    let mut fibers: HashMap<Tableau, u64> = HashMap::new();
    let mut ssyt_count = 0u64;
    for t in enumerate_ssyt(shape, m) {
        ssyt_count += 1;
        *fibers.entry(destandardize(&t)?).or_insert(0) += 1;
    }
    let mut qyt_count = 0u64;
    let mut surjective = true;
    for q in enumerate_qyt(shape, CountMode::Le(m)) {
        qyt_count += 1;
        if !fibers.contains_key(&q) {
            surjective = false;
        }
    }
    // The image is contained in QYT_{<=m} for any semistandard input, so the
    // fiber count doubles as an image check.
    surjective = surjective && fibers.len() as u64 == qyt_count;
    let max_fiber_size = fibers.values().copied().max().unwrap_or(0);
    Ok(DstFiberReport {
        shape: shape.to_string(),
        m,
        ssyt_count,
        qyt_count,
        surjective,
        injective: max_fiber_size <= 1,
        max_fiber_size,
    })
}
