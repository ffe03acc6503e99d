//! Cell diagrams in the first quadrant and their canonical constructors.
//!
//! A diagram is a finite set of unit cells at positive integer coordinates.
//! Rows and columns are 1-indexed and row 1 is the bottom, so "dropping" a
//! cell decreases its row index. Diagrams are stored as sorted cell lists
//! (row-major, bottom-up); equality and hashing act on that canonical list.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::WeakComposition;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A single cell at `(row, col)`, both 1-indexed; row 1 is the bottom row.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    /// Builds a cell; both coordinates must be at least 1.
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cell coordinates are 1-indexed");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite set of cells, kept sorted by (row, col).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Diagram {
    cells: Vec<Cell>,
}

impl Diagram {
    /// The empty diagram.
    pub fn empty() -> Self {
        Diagram { cells: Vec::new() }
    }

    /// Builds a diagram from any collection of cells, deduplicating.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        Diagram {
            cells: set.into_iter().collect(),
        }
    }

    /// The cells in canonical (row, col) order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// True for the empty diagram.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// True when `(row, col)` is occupied.
    pub fn contains(&self, row: u32, col: u32) -> bool {
        self.cells.binary_search(&Cell { row, col }).is_ok()
    }

    /// Highest occupied row, or 0 for the empty diagram.
    pub fn height(&self) -> u32 {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    /// Rightmost occupied column, or 0 for the empty diagram.
    pub fn width(&self) -> u32 {
        self.cells.iter().map(|c| c.col).max().unwrap_or(0)
    }

    /// The cells of row `r`, in column order.
    pub fn row(&self, r: u32) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied().filter(move |c| c.row == r)
    }

    /// The rows of the cells in column `c`, ascending.
    pub fn column_rows(&self, c: u32) -> Vec<u32> {
        self.cells
            .iter()
            .filter(|cell| cell.col == c)
            .map(|cell| cell.row)
            .collect()
    }

    /// Number of cells in each row: part `i` counts row `i`.
    pub fn weight(&self) -> WeakComposition {
        let h = self.height() as usize;
        let mut counts = vec![0u32; h];
        for c in &self.cells {
            counts[c.row as usize - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    /// Per-column cell counts, indexed by column.
    pub fn column_counts(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for c in &self.cells {
            *counts.entry(c.col).or_insert(0) += 1;
        }
        counts
    }

    /// Moves every cell of row `r` up to row `r+1`.
    ///
    /// Fails with `RowCollision` when some cell of row `r` sits immediately
    /// below a cell of row `r+1`.
    pub fn up(&self, r: u32) -> Result<Diagram> {
        for cell in self.row(r) {
            if self.contains(r + 1, cell.col) {
                return Err(Error::RowCollision {
                    row: r,
                    col: cell.col,
                });
            }
        }
        Ok(Diagram::from_cells(self.cells.iter().map(|&c| {
            if c.row == r {
                Cell::new(c.row + 1, c.col)
            } else {
                c
            }
        })))
    }

    /// Shifts the whole diagram up by `m` rows.
    pub fn shift_up(&self, m: u32) -> Diagram {
        Diagram {
            cells: self
                .cells
                .iter()
                .map(|&c| Cell::new(c.row + m, c.col))
                .collect(),
        }
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram{:?}", self.cells)
    }
}

/// Left-justified diagram of weight `a`: row `i` occupies columns `1..=a_i`.
pub fn key_diagram(a: &WeakComposition) -> Diagram {
    let mut cells = Vec::new();
    for (i, &p) in a.parts().iter().enumerate() {
        for c in 1..=p {
            cells.push(Cell::new(i as u32 + 1, c));
        }
    }
    Diagram::from_cells(cells)
}

/// Right-justified diagram of weight `a`: row `i` occupies the last `a_i` of
/// the first `max(a)` columns.
pub fn lock_diagram(a: &WeakComposition) -> Diagram {
    let max = a.parts().iter().copied().max().unwrap_or(0);
    let mut cells = Vec::new();
    for (i, &p) in a.parts().iter().enumerate() {
        for c in (max - p + 1)..=max {
            cells.push(Cell::new(i as u32 + 1, c));
        }
    }
    Diagram::from_cells(cells)
}

/// The inversion diagram of a permutation: cells `(i, w_j)` for every pair
/// `i < j` with `w_i > w_j`. Its weight is the Lehmer code of `w`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let word = w.one_line();
    let n = word.len();
    let mut cells = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if word[i] > word[j] {
                cells.push(Cell::new(i as u32 + 1, word[j]));
            }
        }
    }
    Diagram::from_cells(cells)
}

/// Builds the shifted diagram of `a` in three steps: start from the
/// left-justified diagram, then for each nonzero row `j` (in increasing
/// order) whose previous nonzero row `i` has `a_i > a_j`, shift rows `j` and
/// above right by `a_i - a_j`; finally shift each nonzero row `j` right by the
/// number of zero rows below it.
pub fn skew_diagram(a: &WeakComposition) -> Diagram {
    let parts = a.parts();
    let n = parts.len();
    let mut offset = vec![0u32; n];
    let mut prev_nonzero: Option<usize> = None;
    for j in 0..n {
        if parts[j] == 0 {
            continue;
        }
        if let Some(i) = prev_nonzero {
            if parts[i] > parts[j] {
                let shift = parts[i] - parts[j];
                for k in j..n {
                    offset[k] += shift;
                }
            }
        }
        prev_nonzero = Some(j);
    }
    let mut zeros_below = 0u32;
    let mut cells = Vec::new();
    for j in 0..n {
        if parts[j] == 0 {
            zeros_below += 1;
            continue;
        }
        for c in 1..=parts[j] {
            cells.push(Cell::new(j as u32 + 1, c + offset[j] + zeros_below));
        }
    }
    Diagram::from_cells(cells)
}

/// A pair of cells witnessing that a diagram is split: `(r2,c1)` and
/// `(r1,c2)` with `r1 < r2`, `c1 < c2`, no cells in the rows strictly
/// between, nothing left of `(r1,c2)` in row `r1`, and nothing right of
/// `(r2,c1)` in row `r2`.
pub fn split_pair(d: &Diagram) -> Option<(Cell, Cell)> {
    for &upper in d.cells() {
        for &lower in d.cells() {
            let (r2, c1) = (upper.row, upper.col);
            let (r1, c2) = (lower.row, lower.col);
            if r1 >= r2 || c1 >= c2 {
                continue;
            }
            if d.cells()
                .iter()
                .any(|c| c.row > r1 && c.row < r2)
            {
                continue;
            }
            if d.row(r1).any(|c| c.col < c2) {
                continue;
            }
            if d.row(r2).any(|c| c.col > c1) {
                continue;
            }
            return Some((upper, lower));
        }
    }
    None
}

/// True when the diagram contains a split pair (see [`split_pair`]).
pub fn is_split(d: &Diagram) -> bool {
    split_pair(d).is_some()
}

/// Number of cells of `d` in column `c` with row in `(r, r+k]`.
fn column_count_above(d: &Diagram, c: u32, r: u32, k: u32) -> usize {
    d.cells()
        .iter()
        .filter(|cell| cell.col == c && cell.row > r && cell.row <= r + k)
        .count()
}

/// The leftmost cell of some row witnessing failure of the fundamental
/// condition, or `None` if the diagram is fundamental.
pub fn fundamental_violation(d: &Diagram) -> Option<Cell> {
    let height = d.height();
    let rows: BTreeSet<u32> = d.cells().iter().map(|c| c.row).collect();
    for r in rows {
        let c = d.row(r).map(|cell| cell.col).min().unwrap();
        if d.contains(r + 1, c) {
            continue;
        }
        for c_prime in 1..c {
            for k in 1..=height {
                if column_count_above(d, c_prime, r, k) > column_count_above(d, c, r, k) {
                    return Some(Cell::new(r, c));
                }
            }
        }
    }
    None
}

/// True when every row's leftmost cell `(r,c)` either has a cell directly
/// above it or its column weakly majorizes every column to its left over all
/// windows of rows above `r`.
pub fn is_fundamental(d: &Diagram) -> bool {
    fundamental_violation(d).is_none()
}

/// A pair of cells `(r2,c1)`, `(r1,c2)` with `r1 < r2`, `c1 < c2`, and
/// `(r1,c1)` missing, or `None` when the diagram is northwest-closed.
pub fn demazure_violation(d: &Diagram) -> Option<(Cell, Cell)> {
    for &upper in d.cells() {
        for &lower in d.cells() {
            if lower.row < upper.row
                && upper.col < lower.col
                && !d.contains(lower.row, upper.col)
            {
                return Some((upper, lower));
            }
        }
    }
    None
}

/// True when the cell set is northwest-closed: whenever `(r2,c1)` and
/// `(r1,c2)` are present with `r1 < r2` and `c1 < c2`, so is `(r1,c1)`.
pub fn is_demazure(d: &Diagram) -> bool {
    demazure_violation(d).is_none()
}

/// Equivalent characterization of [`is_demazure`] by strict column-count
/// inequalities: for each cell `(r,c)` and each column `c'` strictly between
/// `c` and the nearest cell to its left in row `r`, every window count
/// `#{(s,c') : r < s <= r+k}` must be strictly less than the same count for
/// column `c` whenever it is nonzero.
pub fn is_demazure_by_counts(d: &Diagram) -> bool {
    let height = d.height();
    for &cell in d.cells() {
        let (r, c) = (cell.row, cell.col);
        let left_neighbor = d
            .row(r)
            .filter(|x| x.col < c)
            .map(|x| x.col)
            .max()
            .unwrap_or(0);
        for c_prime in (left_neighbor + 1)..c {
            for k in 1..=height {
                let lhs = column_count_above(d, c_prime, r, k);
                let rhs = column_count_above(d, c, r, k);
                if lhs != 0 && lhs >= rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Renders the grid format: one line per row from the highest nonempty row
/// down to row 1, `x` for a cell and `.` for an empty position, each line as
/// wide as the rightmost occupied column. The empty diagram renders as the
/// empty string.
pub fn format_diagram(d: &Diagram) -> String {
    if d.is_empty() {
        return String::new();
    }
    let width = d.width();
    let mut out = String::new();
    for r in (1..=d.height()).rev() {
        for c in 1..=width {
            out.push(if d.contains(r, c) { 'x' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Parses the grid format produced by [`format_diagram`]. The first line is
/// the highest row. Accepts `x`/`X` for cells and `.` for gaps.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let lines: Vec<&str> = text.lines().collect();
    let height = lines.len() as u32;
    let mut cells = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let row = height - i as u32;
        for (j, ch) in line.chars().enumerate() {
            match ch {
                'x' | 'X' => cells.push(Cell::new(row, j as u32 + 1)),
                '.' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "line {}, column {}: unexpected character {:?}",
                        i + 1,
                        j + 1,
                        other
                    )))
                }
            }
        }
    }
    Ok(Diagram::from_cells(cells))
}

/// Parses the cell-list format: one `row,col` pair per line (or separated by
/// semicolons), order irrelevant.
pub fn parse_cell_list(text: &str) -> Result<Diagram> {
    let mut cells = Vec::new();
    for (i, raw) in text
        .split(|c| c == '\n' || c == ';')
        .map(str::trim)
        .enumerate()
    {
        if raw.is_empty() {
            continue;
        }
        let mut parts = raw.split(',').map(str::trim);
        let err = || Error::Parse(format!("entry {}: expected `row,col`, got {:?}", i + 1, raw));
        let row: u32 = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        let col: u32 = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        if parts.next().is_some() || row == 0 || col == 0 {
            return Err(err());
        }
        cells.push(Cell::new(row, col));
    }
    Ok(Diagram::from_cells(cells))
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    cells: Vec<(u32, u32)>,
}

/// Parses the JSON form `{"cells": [[r,c], ...]}`.
pub fn diagram_from_json(text: &str) -> Result<Diagram> {
    let parsed: DiagramJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    if parsed.cells.iter().any(|&(r, c)| r == 0 || c == 0) {
        return Err(Error::Parse("cell coordinates must be positive".into()));
    }
    Ok(Diagram::from_cells(
        parsed.cells.into_iter().map(|(r, c)| Cell::new(r, c)),
    ))
}

/// Serializes a diagram to the JSON form `{"cells": [[r,c], ...]}`.
pub fn diagram_to_json(d: &Diagram) -> String {
    let json = DiagramJson {
        cells: d.cells().iter().map(|c| (c.row, c.col)).collect(),
    };
    serde_json::to_string(&json).expect("diagram serialization cannot fail")
}
