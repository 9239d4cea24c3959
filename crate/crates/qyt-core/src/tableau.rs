//! Tableaux: fillings of partition shapes, the semistandard / standard /
//! quasi-Yamanouchi predicates, descent and run statistics, exhaustive
//! generators, and the explicit witness constructions.
//!
//! The generators here are the brute-force oracle everything else is checked
//! against. They backtrack over cells in row-major order (bottom row first),
//! pruning with the row-weak / column-strict constraints, and therefore yield
//! fillings in lexicographic order of the bottom-up reading word.

use std::fmt;

use num_bigint::BigUint;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// Bound on quasi-Yamanouchi counting and enumeration: either the largest
/// entry is exactly `m`, or all entries are at most `m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMode {
    Eq(u32),
    Le(u32),
}

impl CountMode {
    pub fn bound(self) -> u32 {
        match self {
            CountMode::Eq(m) | CountMode::Le(m) => m,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CountMode::Eq(_) => "eq",
            CountMode::Le(_) => "le",
        }
    }
}

/// A filling of a partition shape with positive integers. Rows are stored
/// bottom-up: `rows()[0]` is the bottom (longest) row. Construction only
/// checks the shape; the predicates below classify the filling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Build from rows listed bottom-up. Row lengths must weakly decrease and
    /// all entries must be positive.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape = Partition::new(lens).map_err(|_| Error::MalformedTableau)?;
        if rows.iter().any(|r| r.contains(&0)) {
            return Err(Error::MalformedTableau);
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// Largest entry. Errors on the empty tableau.
    pub fn max_entry(&self) -> Result<u32> {
        self.rows
            .iter()
            .flatten()
            .copied()
            .max()
            .ok_or(Error::EmptyShape)
    }

    /// Rows weakly increase left to right, columns strictly increase upward.
    pub fn is_ssyt(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                let below = &self.rows[r - 1];
                if row.iter().zip(below).any(|(&up, &down)| up <= down) {
                    return false;
                }
            }
        }
        true
    }

    /// Semistandard and using each of 1..=n exactly once.
    pub fn is_syt(&self) -> bool {
        if !self.is_ssyt() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if (v as usize) > n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    /// Semistandard and, for every value i >= 2 that appears, the leftmost i
    /// is weakly left of some i-1. This forces the values present to be
    /// exactly 1..=max_entry.
    pub fn is_qyt(&self) -> bool {
        if !self.is_ssyt() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let max = self.max_entry().unwrap() as usize;
        // min_col[v] / max_col[v] over occurrences of v; 0 means absent.
        let mut min_col = vec![0usize; max + 1];
        let mut max_col = vec![0usize; max + 1];
        for row in &self.rows {
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
        (2..=max).all(|v| min_col[v] == 0 || (max_col[v - 1] != 0 && min_col[v] <= max_col[v - 1]))
    }

    /// Cell of each value 1..=n of a standard filling, indexed by value.
    fn positions_by_value(&self) -> Result<Vec<Cell>> {
        if !self.is_syt() {
            return Err(Error::NotStandard);
        }
        let n = self.size();
        let mut pos = vec![Cell::new(0, 0); n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v as usize] = Cell::new(c + 1, r + 1);
            }
        }
        Ok(pos)
    }

    /// Descent set of a standard filling: entries i such that i+1 sits weakly
    /// left of i (column of i+1 <= column of i).
    pub fn descent_set(&self) -> Result<DescentSet> {
        let pos = self.positions_by_value()?;
        let n = self.size();
        let elems = (1..n).filter(|&i| pos[i + 1].col <= pos[i].col).collect();
        Ok(DescentSet { elems })
    }

    /// Runs of a standard filling: maximal blocks of consecutive entries
    /// delimited by the descent set, each as a list of cells in entry order.
    /// There are |Des| + 1 runs.
    pub fn runs(&self) -> Result<Vec<Vec<Cell>>> {
        let pos = self.positions_by_value()?;
        let n = self.size();
        let des = self.descent_set()?;
        let mut runs = Vec::with_capacity(des.len() + 1);
        let mut start = 1usize;
        for &d in des.elements() {
            runs.push((start..=d).map(|v| pos[v]).collect());
            start = d + 1;
        }
        if n > 0 {
            runs.push((start..=n).map(|v| pos[v]).collect());
        }
        Ok(runs)
    }
}

impl fmt::Display for Tableau {
    /// Top row first, one line per row, entries right-aligned.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({:?})", self.rows)
    }
}

impl Serialize for Tableau {
    /// Serializes as `{"shape": [...], "rows": [[...], ...]}` with rows
    /// bottom-up.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Tableau", 2)?;
        s.serialize_field("shape", self.shape.parts())?;
        s.serialize_field("rows", &self.rows)?;
        s.end()
    }
}

/// Descent set of a standard filling of size n: a strictly increasing subset
/// of 1..=n-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescentSet {
    elems: Vec<usize>,
}

impl DescentSet {
    /// Build from a strictly increasing list of positive integers.
    pub fn new(elems: Vec<usize>) -> Result<Self> {
        let ok = elems.iter().all(|&d| d >= 1) && elems.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(DescentSet { elems })
        } else {
            Err(Error::InvalidDescentSet(elems))
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    /// Complement within {1, .., n-1}.
    pub fn complement(&self, n: usize) -> DescentSet {
        let elems = (1..n).filter(|&i| !self.contains(i)).collect();
        DescentSet { elems }
    }
}

/// Feasible range of the largest entry over quasi-Yamanouchi fillings of a
/// shape: `(len, n - (part1 - 1))`. `None` for the empty shape.
pub fn qyt_max_entry_range(shape: &Partition) -> Option<(u32, u32)> {
    if shape.is_empty() {
        return None;
    }
    let lo = shape.len() as u32;
    let hi = (shape.size() - (shape.parts()[0] - 1)) as u32;
    Some((lo, hi))
}

// ---------------------------------------------------------------------------
// Semistandard filling engine
// ---------------------------------------------------------------------------

const NO_CELL: usize = usize::MAX;

/// Backtracking state machine over all semistandard fillings of a shape with
/// entries bounded by `max`. Cells are visited in row-major order, bottom row
/// first; complete fillings come out in lexicographic order of that reading
/// word. Each cell assignment counts as one visited state against the budget.
struct FillingEngine {
    max: u32,
    ncells: usize,
    vals: Vec<u32>,
    left: Vec<usize>,
    below: Vec<usize>,
    col_of: Vec<u32>,
    row_bounds: Vec<usize>,
    pos: usize,
    started: bool,
    exhausted: bool,
    visited: u64,
    budget: u64,
    budget_hit: bool,
}

impl FillingEngine {
    fn new(shape: &Partition, max: u32, budget: u64) -> Self {
        let ncells = shape.size();
        let mut left = vec![NO_CELL; ncells];
        let mut below = vec![NO_CELL; ncells];
        let mut col_of = vec![0u32; ncells];
        let mut row_bounds = Vec::with_capacity(shape.len() + 1);
        row_bounds.push(0);
        let mut idx = 0;
        let mut prev_row_start = 0;
        for (r, &len) in shape.parts().iter().enumerate() {
            let row_start = idx;
            for c in 0..len {
                if c > 0 {
                    left[idx] = idx - 1;
                }
                if r > 0 {
                    below[idx] = prev_row_start + c;
                }
                col_of[idx] = (c + 1) as u32;
                idx += 1;
            }
            row_bounds.push(idx);
            prev_row_start = row_start;
        }
        FillingEngine {
            max,
            ncells,
            vals: vec![0; ncells],
            left,
            below,
            col_of,
            row_bounds,
            pos: 0,
            started: false,
            exhausted: false,
            visited: 0,
            budget,
            budget_hit: false,
        }
    }

    fn lower_bound(&self, idx: usize) -> u32 {
        let mut lo = 1;
        if self.left[idx] != NO_CELL {
            lo = lo.max(self.vals[self.left[idx]]);
        }
        if self.below[idx] != NO_CELL {
            lo = lo.max(self.vals[self.below[idx]] + 1);
        }
        lo
    }

    fn assign(&mut self, idx: usize, v: u32) -> bool {
        self.visited += 1;
        if self.visited > self.budget {
            self.budget_hit = true;
            self.exhausted = true;
            return false;
        }
        self.vals[idx] = v;
        true
    }

    /// Retreat to the deepest cell that can take a larger value and bump it.
    fn bump(&mut self) -> bool {
        loop {
            if self.pos == 0 {
                self.exhausted = true;
                return false;
            }
            self.pos -= 1;
            let v = self.vals[self.pos] + 1;
            if v <= self.max {
                if !self.assign(self.pos, v) {
                    return false;
                }
                self.pos += 1;
                return true;
            }
        }
    }

    /// Move to the next complete filling. Returns false when exhausted (or
    /// when the state budget is hit; check `budget_hit`).
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if !self.started {
            self.started = true;
            self.pos = 0;
        } else {
            if self.ncells == 0 {
                self.exhausted = true;
                return false;
            }
            self.pos = self.ncells;
            if !self.bump() {
                return false;
            }
        }
        loop {
            if self.pos == self.ncells {
                return true;
            }
            let lo = self.lower_bound(self.pos);
            if lo <= self.max {
                if !self.assign(self.pos, lo) {
                    return false;
                }
                self.pos += 1;
            } else if !self.bump() {
                return false;
            }
        }
    }

    fn values(&self) -> &[u32] {
        &self.vals
    }

    fn to_tableau(&self, shape: &Partition) -> Tableau {
        let rows = (0..shape.len())
            .map(|r| self.vals[self.row_bounds[r]..self.row_bounds[r + 1]].to_vec())
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }
}

/// Per-filling statistics needed by the quasi-Yamanouchi filters, computed
/// from the flat value buffer: largest value and, per value, the leftmost and
/// rightmost column of an occurrence.
struct FlatStats {
    min_col: Vec<u32>,
    max_col: Vec<u32>,
}

impl FlatStats {
    fn new(cap: u32) -> Self {
        FlatStats {
            min_col: vec![0; cap as usize + 1],
            max_col: vec![0; cap as usize + 1],
        }
    }

    /// Returns the largest value present (0 for an empty filling).
    fn load(&mut self, vals: &[u32], col_of: &[u32]) -> u32 {
        self.min_col.fill(0);
        self.max_col.fill(0);
        let mut max_val = 0;
        for (&v, &c) in vals.iter().zip(col_of) {
            let v = v as usize;
            if self.min_col[v] == 0 || c < self.min_col[v] {
                self.min_col[v] = c;
            }
            if c > self.max_col[v] {
                self.max_col[v] = c;
            }
            max_val = max_val.max(v as u32);
        }
        max_val
    }

    fn is_qyt(&self, max_val: u32) -> bool {
        (2..=max_val as usize).all(|v| {
            self.min_col[v] == 0
                || (self.max_col[v - 1] != 0 && self.min_col[v] <= self.max_col[v - 1])
        })
    }
}

/// Lazy stream over all semistandard fillings of `shape` with entries at most
/// `max`, in lexicographic order of the bottom-up row-major reading word.
/// Empty when `max` is less than the number of rows.
pub fn enumerate_ssyt(shape: &Partition, max: u32) -> SsytIter {
    SsytIter {
        shape: shape.clone(),
        engine: FillingEngine::new(shape, max, u64::MAX),
    }
}

pub struct SsytIter {
    shape: Partition,
    engine: FillingEngine,
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.engine.advance() {
            Some(self.engine.to_tableau(&self.shape))
        } else {
            None
        }
    }
}

/// Lazy stream over the quasi-Yamanouchi fillings of `shape`: those with
/// entries at most `m` in `Le(m)` mode, those with largest value exactly `m`
/// in `Eq(m)` mode. Filters [`enumerate_ssyt`], so the order is inherited.
pub fn enumerate_qyt(shape: &Partition, mode: CountMode) -> QytIter {
    QytIter {
        inner: enumerate_ssyt(shape, mode.bound()),
        mode,
    }
}

pub struct QytIter {
    inner: SsytIter,
    mode: CountMode,
}

impl Iterator for QytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        for t in self.inner.by_ref() {
            if !t.is_qyt() {
                continue;
            }
            match self.mode {
                CountMode::Le(_) => return Some(t),
                CountMode::Eq(m) => {
                    if !t.is_empty() && t.max_entry().unwrap() == m {
                        return Some(t);
                    }
                    // Empty tableau: the only filling of the empty shape has
                    // no largest value; treat it as Eq(0).
                    if t.is_empty() && m == 0 {
                        return Some(t);
                    }
                }
            }
        }
        None
    }
}

/// Lazy stream over the standard fillings of `shape`, produced by choosing,
/// for each of 1..=n in order, the row that receives it (lowest row first).
pub fn enumerate_syt(shape: &Partition) -> SytIter {
    SytIter::new(shape)
}

pub struct SytIter {
    shape: Partition,
    n: usize,
    filled: Vec<usize>,
    choice: Vec<usize>,
    pos: usize,
    started: bool,
    exhausted: bool,
}

impl SytIter {
    fn new(shape: &Partition) -> Self {
        let n = shape.size();
        SytIter {
            shape: shape.clone(),
            n,
            filled: vec![0; shape.len()],
            choice: vec![0; n],
            pos: 0,
            started: false,
            exhausted: false,
        }
    }

    /// Smallest row >= `start` that can receive the next value: the row has a
    /// free cell and sits on a strictly longer prefix of the row below.
    fn find_row(&self, start: usize) -> Option<usize> {
        (start..self.shape.len()).find(|&r| {
            self.filled[r] < self.shape.parts()[r]
                && (r == 0 || self.filled[r - 1] > self.filled[r])
        })
    }

    /// Unplace the value at `pos - 1`; returns the next row to try for it.
    fn pop(&mut self) -> Option<usize> {
        if self.pos == 0 {
            self.exhausted = true;
            return None;
        }
        self.pos -= 1;
        let r = self.choice[self.pos];
        self.filled[r] -= 1;
        Some(r + 1)
    }

    fn build(&self) -> Tableau {
        let mut rows: Vec<Vec<u32>> = self
            .shape
            .parts()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect();
        for (k, &r) in self.choice.iter().enumerate() {
            rows[r].push((k + 1) as u32);
        }
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.exhausted {
            return None;
        }
        let mut start;
        if !self.started {
            self.started = true;
            start = 0;
        } else {
            if self.n == 0 {
                self.exhausted = true;
                return None;
            }
            start = self.pop()?;
        }
        loop {
            if self.pos == self.n {
                return Some(self.build());
            }
            match self.find_row(start) {
                Some(r) => {
                    self.choice[self.pos] = r;
                    self.filled[r] += 1;
                    self.pos += 1;
                    start = 0;
                }
                None => start = self.pop()?,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive counting
// ---------------------------------------------------------------------------

/// Count quasi-Yamanouchi fillings by exhaustive generation. This is the
/// brute-force oracle the closed forms are checked against; it applies no
/// feasibility shortcuts. `budget` caps the number of visited partial
/// fillings (cell assignments).
pub fn count_qyt_brute(shape: &Partition, mode: CountMode, budget: Option<u64>) -> Result<BigUint> {
    let cap = mode.bound();
    let budget = budget.unwrap_or(u64::MAX);
    let mut engine = FillingEngine::new(shape, cap, budget);
    let mut stats = FlatStats::new(cap);
    let col_of = engine.col_of.clone();
    let mut count: u64 = 0;
    while engine.advance() {
        let max_val = stats.load(engine.values(), &col_of);
        if !stats.is_qyt(max_val) {
            continue;
        }
        let keep = match mode {
            CountMode::Le(_) => true,
            CountMode::Eq(m) => max_val == m,
        };
        if keep {
            count += 1;
        }
    }
    if engine.budget_hit {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(BigUint::from(count))
}

/// Count fillings in QYT_{=m}(shape) having some occurrence of `m` strictly
/// right of column `col`. With `col = 1` this is the count of fillings where
/// `m` appears anywhere but the first column; with `col = 2`, anywhere but
/// the first two columns.
pub fn count_qyt_max_beyond_column(
    shape: &Partition,
    m: u32,
    col: usize,
    budget: Option<u64>,
) -> Result<BigUint> {
    let budget = budget.unwrap_or(u64::MAX);
    let mut engine = FillingEngine::new(shape, m, budget);
    let mut stats = FlatStats::new(m);
    let col_of = engine.col_of.clone();
    let mut count: u64 = 0;
    while engine.advance() {
        let max_val = stats.load(engine.values(), &col_of);
        if max_val == m && stats.is_qyt(max_val) && stats.max_col[m as usize] as usize > col {
            count += 1;
        }
    }
    if engine.budget_hit {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(BigUint::from(count))
}

// ---------------------------------------------------------------------------
// Witness constructions
// ---------------------------------------------------------------------------

/// Chain the columns: fill the first column 1..h bottom to top, then start
/// each next column at the value topping the previous one. The result is a
/// quasi-Yamanouchi filling whose largest entry is the maximal feasible
/// n - (part1 - 1).
pub fn witness_max(shape: &Partition) -> Result<Tableau> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    let heights = shape.conjugate();
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(heights.len());
    let mut start: u32 = 1;
    for &h in heights.parts() {
        let h = h as u32;
        let top = start + h - 1;
        cols.push((start..=top).collect());
        start = top;
    }
    columns_to_tableau(shape, cols)
}

/// A member of QYT_{=m}(shape) for any feasible m: chain columns as in
/// [`witness_max`] until the column where `m` lands, slide that column down
/// so `m` is on top, then copy every later column from its left neighbour.
pub fn witness_for(shape: &Partition, m: u32) -> Result<Tableau> {
    let (lo, hi) = qyt_max_entry_range(shape).ok_or(Error::EmptyShape)?;
    if m < lo || m > hi {
        return Err(Error::OutOfRange { m, lo, hi });
    }
    // At the top of the feasible range the column chain itself is the witness
    // (when the range is a single point, the slide construction applies and
    // yields the filling with every row-r entry equal to r).
    if m == hi && hi > lo {
        return witness_max(shape);
    }
    let heights = shape.conjugate();
    let ncols = heights.len();
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(ncols);
    let mut start: u32 = 1;
    for c in 0..ncols {
        let h = heights.parts()[c] as u32;
        let top = start + h - 1;
        if top >= m {
            cols.push((m - h + 1..=m).collect());
            for c2 in c + 1..ncols {
                let h2 = heights.parts()[c2];
                let seg = cols[c2 - 1][..h2].to_vec();
                cols.push(seg);
            }
            break;
        }
        cols.push((start..=top).collect());
        start = top;
    }
    columns_to_tableau(shape, cols)
}

fn columns_to_tableau(shape: &Partition, cols: Vec<Vec<u32>>) -> Result<Tableau> {
    let rows = (0..shape.len())
        .map(|r| {
            (0..shape.parts()[r])
                .map(|c| cols[c][r])
                .collect::<Vec<u32>>()
        })
        .collect();
    Tableau::from_rows(rows)
}
