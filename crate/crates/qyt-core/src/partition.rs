//! Partitions, diagram geometry, and per-cell statistics.
//!
//! Diagrams are drawn in French orientation: row 1 is the bottom row and the
//! longest, rows weakly shrink going up. A cell is addressed as `(col, row)`,
//! both 1-based, so the diagram of `(4, 2, 1)` is
//!
//! ```text
//! row 3 | x
//! row 2 | x x
//! row 1 | x x x x
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell of a Young diagram. `col` and `row` are 1-based, French orientation
/// (row 1 at the bottom).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    /// The content c(u) = col - row. Zero on the main diagonal.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition is allowed and is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build a partition, rejecting non-decreasing or zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row >= 1 {
            self.parts.get(row - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col >= 1 && cell.row >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All cells in row-major order, bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(c, r + 1)))
    }

    /// The conjugate (transpose) partition: part j of the result is the number
    /// of parts of `self` that are >= j.
    pub fn conjugate(&self) -> Partition {
        let ncols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=ncols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Side length of the largest square fitting in the diagram: the largest d
    /// with part d >= d. Zero for the empty partition.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Hook length of a cell: its arm (cells to the right in the same row)
    /// plus its leg (cells above in the same column) plus one.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfShape {
                col: cell.col,
                row: cell.row,
                shape: self.to_string(),
            });
        }
        let arm = self.row_len(cell.row) - cell.col;
        let col_height = self.parts.iter().take_while(|&&p| p >= cell.col).count();
        let leg = col_height - cell.row;
        Ok(arm + leg + 1)
    }

    /// The (lambda1, lambda2, h1, h2) frame when the Durfee size is exactly 2.
    pub fn durfee2_frame(&self) -> Option<Durfee2Frame> {
        if self.durfee_size() != 2 {
            return None;
        }
        let lambda1 = self.parts[0];
        let lambda2 = self.parts[1];
        let h1 = self.parts.len();
        let h2 = self.parts.iter().take_while(|&&p| p >= 2).count();
        Some(Durfee2Frame {
            lambda1,
            lambda2,
            h1,
            h2,
        })
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parse comma-separated parts, each either an integer or `part^mult`
    /// (exponent notation, e.g. `6,4,2^2,1` for `6,4,2,2,1`). Whitespace
    /// around tokens is ignored; the empty string is the empty partition.
    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base_str, mult_str) = match token.split_once('^') {
                Some((b, m)) => (b.trim(), Some(m.trim())),
                None => (token, None),
            };
            let base: usize = base_str
                .parse()
                .map_err(|_| err(&format!("bad part {token:?}")))?;
            let mult: usize = match mult_str {
                Some(s) => s
                    .parse()
                    .map_err(|_| err(&format!("bad multiplicity in {token:?}")))?,
                None => 1,
            };
            parts.extend(std::iter::repeat_n(base, mult));
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Canonical rendering: comma-separated parts without exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

/// The four-parameter description of a Durfee-size-2 shape: first and second
/// row lengths, first and second column heights. Such a shape is exactly
/// `(lambda1, lambda2, 2^(h2-2), 1^(h1-h2))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Durfee2Frame {
    lambda1: usize,
    lambda2: usize,
    h1: usize,
    h2: usize,
}

impl Durfee2Frame {
    pub fn new(lambda1: usize, lambda2: usize, h1: usize, h2: usize) -> Result<Self> {
        if lambda1 >= lambda2 && lambda2 >= 2 && h1 >= h2 && h2 >= 2 {
            Ok(Durfee2Frame {
                lambda1,
                lambda2,
                h1,
                h2,
            })
        } else {
            Err(Error::InvalidFrame)
        }
    }

    pub fn lambda1(&self) -> usize {
        self.lambda1
    }

    pub fn lambda2(&self) -> usize {
        self.lambda2
    }

    pub fn h1(&self) -> usize {
        self.h1
    }

    pub fn h2(&self) -> usize {
        self.h2
    }

    /// Total number of boxes: lambda1 + lambda2 + h1 + h2 - 4.
    pub fn size(&self) -> usize {
        self.lambda1 + self.lambda2 + self.h1 + self.h2 - 4
    }

    /// The partition (lambda1, lambda2, 2^(h2-2), 1^(h1-h2)).
    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.lambda1, self.lambda2];
        parts.extend(std::iter::repeat_n(2, self.h2 - 2));
        parts.extend(std::iter::repeat_n(1, self.h1 - self.h2));
        Partition { parts }
    }

    /// Frame of the conjugate shape: rows and columns swap roles.
    pub fn conjugate(&self) -> Durfee2Frame {
        Durfee2Frame {
            lambda1: self.h1,
            lambda2: self.h2,
            h1: self.lambda1,
            h2: self.lambda2,
        }
    }
}

/// All partitions of `n` in reverse-lexicographic order (largest first part
/// first): `partitions_of(4)` is `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=cap.min(remaining)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
