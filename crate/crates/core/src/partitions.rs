//! Integer partitions and their Young diagrams.
//!
//! Diagrams use English notation with 1-based `(row, col)` coordinates: row 1
//! is the top row and rows grow downward. A cell `(i, j)` belongs to `λ` iff
//! `j <= λ_i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("negative part {value} at position {index}")]
    NegativePart { index: usize, value: i64 },
    #[error("parts are not weakly decreasing at position {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("the empty partition has no cells")]
    EmptyPartition,
    #[error("cell {0} is not an internal corner")]
    NotACorner(Cell),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts never appear in the stored form, so two partitions are equal
/// iff their diagrams are. The derived ordering is lexicographic on parts.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Builds a partition from raw, possibly user-supplied parts.
///
/// Trailing zeros are stripped. Negative parts and increasing adjacent pairs
/// are rejected.
pub fn make_partition(parts: &[i64]) -> Result<Partition, PartitionError> {
    for (index, &value) in parts.iter().enumerate() {
        if value < 0 {
            return Err(PartitionError::NegativePart { index, value });
        }
    }
    for (index, w) in parts.windows(2).enumerate() {
        if w[0] < w[1] {
            return Err(PartitionError::NotWeaklyDecreasing { index: index + 1 });
        }
    }
    let parts = parts
        .iter()
        .take_while(|&&p| p > 0)
        .map(|&p| p as usize)
        .collect();
    Ok(Partition { parts })
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validating constructor from unsigned parts.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing { index: i + 1 });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// `(1^n)`, a single column.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n)`, a single row.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// `(first, rest...)` where `rest` must already be a partition with
    /// `rest_1 <= first`; returns `None` otherwise.
    pub fn prepend_row(first: usize, rest: &Partition) -> Option<Self> {
        if first < rest.first() || (first == 0 && !rest.is_empty()) {
            return None;
        }
        let mut parts = Vec::with_capacity(rest.len() + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend_from_slice(&rest.parts);
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Reflection along the main diagonal.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `ν ⊆ λ` with `self` as `λ`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Is `self` of the form `(1^k)` (including the empty partition)?
    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Cells whose removal leaves a partition, in increasing row order.
    pub fn internal_corners(&self) -> Result<Vec<Cell>, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok(self.corners().collect())
    }

    /// Same as [`internal_corners`](Self::internal_corners) but empty for `∅`.
    pub fn corners(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().filter_map(move |(i, &len)| {
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            (len > below).then(|| Cell::new(i + 1, len))
        })
    }

    pub fn remove_corner(&self, cell: Cell) -> Result<Partition, PartitionError> {
        let row = cell.row;
        if row == 0 || cell.col != self.part(row) || cell.col == 0 || self.part(row + 1) >= cell.col
        {
            return Err(PartitionError::NotACorner(cell));
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Partitions obtained by removing one internal corner, in row order.
    pub fn predecessors(&self) -> Vec<Partition> {
        self.corners()
            .map(|c| self.remove_corner(c).expect("corner"))
            .collect()
    }

    /// Arm plus leg plus one for every cell, keyed by cell.
    pub fn hook_lengths(&self) -> BTreeMap<Cell, usize> {
        let t = self.transpose();
        self.cells()
            .map(|c| (c, self.hook_length_with(&t, c)))
            .collect()
    }

    pub fn hook_length(&self, cell: Cell) -> usize {
        self.hook_length_with(&self.transpose(), cell)
    }

    fn hook_length_with(&self, transposed: &Partition, cell: Cell) -> usize {
        let arm = self.part(cell.row) - cell.col;
        let leg = transposed.part(cell.col) - cell.row;
        arm + leg + 1
    }

    /// Boundary cells: `(i, j) ∈ λ` with `(i+1, j+1) ∉ λ`.
    pub fn is_boundary(&self, cell: Cell) -> bool {
        self.has_cell(cell) && !self.has_cell(Cell::new(cell.row + 1, cell.col + 1))
    }

    /// All skew hooks (border strips) of `r` cells.
    ///
    /// Each candidate starts at a boundary cell and walks the rim down-left for
    /// `r - 1` steps; it is kept when its removal leaves a partition. The
    /// result is sorted by topmost row, then leftmost cell in that row.
    pub fn skew_hooks(&self, r: usize) -> Vec<SkewHook> {
        assert!(r >= 1, "skew hooks need r >= 1");
        if r > self.size() {
            return Vec::new();
        }
        let mut hooks: Vec<SkewHook> = self
            .cells()
            .filter(|&c| self.is_boundary(c))
            .filter_map(|start| self.walk_rim(start, r))
            .filter_map(|cells| SkewHook::from_cells(self, cells))
            .collect();
        hooks.sort_by_key(|h| h.anchor());
        hooks
    }

    fn walk_rim(&self, start: Cell, r: usize) -> Option<Vec<Cell>> {
        let mut cells = Vec::with_capacity(r);
        let mut cur = start;
        cells.push(cur);
        while cells.len() < r {
            let down = Cell::new(cur.row + 1, cur.col);
            cur = if self.has_cell(down) {
                down
            } else if cur.col > 1 {
                Cell::new(cur.row, cur.col - 1)
            } else {
                return None;
            };
            cells.push(cur);
        }
        Some(cells)
    }

    /// Removes a set of cells, returning the remaining diagram if it is a
    /// partition.
    pub fn remove_cells(&self, cells: &[Cell]) -> Option<Partition> {
        let mut removed = vec![0usize; self.len()];
        for c in cells {
            if !self.has_cell(*c) {
                return None;
            }
            removed[c.row - 1] += 1;
        }
        // removed cells must form a suffix of each row
        for c in cells {
            if c.col <= self.parts[c.row - 1] - removed[c.row - 1] {
                return None;
            }
        }
        let parts: Vec<usize> = self
            .parts
            .iter()
            .zip(&removed)
            .map(|(p, r)| p - r)
            .collect();
        Partition::new(parts).ok()
    }

    /// Every `κ ⊆ λ` such that `λ ∖ κ` has at most one box per row,
    /// `λ` itself included. Sorted in descending lexicographic order.
    pub fn vertical_strip_inners(&self) -> Vec<Partition> {
        let len = self.len();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << len) {
            let parts: Vec<usize> = (0..len)
                .map(|i| self.parts[i] - ((mask >> i) & 1) as usize)
                .collect();
            if let Ok(p) = Partition::new(parts) {
                out.push(p);
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// The number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        let mut parts = self.parts.clone();
        parts.dedup();
        parts.len()
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<i64>) -> Result<Self, Self::Error> {
        make_partition(&parts)
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = PartitionError;

    fn try_from(parts: &[usize]) -> Result<Self, Self::Error> {
        Partition::new(parts.to_vec())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl std::str::FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts, e.g. `"3,3"`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        make_partition(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Enumerates all partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(remaining)).rev() {
        cur.push(p);
        fill(remaining - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of every size up to and including `max`, smallest first.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

/// A connected strip of boundary cells whose removal leaves a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewHook {
    cells: Vec<Cell>,
    leg_length: usize,
    complement: Partition,
}

impl SkewHook {
    fn from_cells(host: &Partition, mut cells: Vec<Cell>) -> Option<Self> {
        let complement = host.remove_cells(&cells)?;
        cells.sort();
        let top = cells.first()?.row;
        let bottom = cells.last()?.row;
        Some(SkewHook {
            cells,
            leg_length: bottom - top,
            complement,
        })
    }

    /// Cells sorted by `(row, col)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of occupied rows minus one.
    pub fn leg_length(&self) -> usize {
        self.leg_length
    }

    /// The host partition with the strip removed.
    pub fn complement(&self) -> &Partition {
        &self.complement
    }

    /// `(-1)^leg_length`.
    pub fn sign(&self) -> i32 {
        if self.leg_length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Topmost cell, leftmost within that row.
    fn anchor(&self) -> Cell {
        self.cells[0]
    }
}
