//! Labeled diagram models: lock tableaux with their canonical labeling
//! algorithm and quasi-Yamanouchi refinement, and (semi-)standard extended
//! tableaux with descent compositions.

use std::collections::BTreeMap;

use crate::composition::{StrongComposition, WeakComposition};
use crate::diagram::{lock_diagram, Cell, Diagram};
use crate::error::{Error, Result};
use crate::moves::enumerate_kd;

/// A diagram together with one positive label per cell and the content
/// composition the labels were drawn from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LockTableau {
    diagram: Diagram,
    labels: BTreeMap<Cell, u32>,
    content: WeakComposition,
}

impl LockTableau {
    /// The underlying cell set.
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// The label of each cell.
    pub fn labels(&self) -> &BTreeMap<Cell, u32> {
        &self.labels
    }

    /// The content composition: the labels are `1^(a_1), 2^(a_2), ...`.
    pub fn content(&self) -> &WeakComposition {
        &self.content
    }

    /// Row weights of the underlying diagram.
    pub fn weight(&self) -> WeakComposition {
        self.diagram.weight()
    }
}

/// The canonical labeling of a member of the closure of the right-justified
/// diagram of `a`: for each `j`, column `max(a)-j+1` receives the labels
/// `{i : a_i >= j}` in increasing order from bottom to top.
///
/// Fails with `ColumnCountMismatch` when the per-column cell counts of `d`
/// differ from those of the right-justified diagram of `a`.
pub fn lock_label(d: &Diagram, a: &WeakComposition) -> Result<LockTableau> {
    let max = a.parts().iter().copied().max().unwrap_or(0);
    let mut labels = BTreeMap::new();
    let mut expected: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for j in 1..=max {
        let col = max - j + 1;
        let who: Vec<u32> = a
            .parts()
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p >= j)
            .map(|(i, _)| i as u32 + 1)
            .collect();
        expected.insert(col, who);
    }
    let counts = d.column_counts();
    for (&col, who) in &expected {
        let got = counts.get(&col).copied().unwrap_or(0);
        if got != who.len() {
            return Err(Error::ColumnCountMismatch {
                col,
                got,
                want: who.len(),
            });
        }
    }
    for (&col, &got) in &counts {
        let want = expected.get(&col).map(Vec::len).unwrap_or(0);
        if got != want {
            return Err(Error::ColumnCountMismatch { col, got, want });
        }
    }
    for (&col, who) in &expected {
        let rows = d.column_rows(col);
        for (row, &label) in rows.iter().zip(who.iter()) {
            labels.insert(Cell::new(*row, col), label);
        }
    }
    Ok(LockTableau {
        diagram: d.clone(),
        labels,
        content: a.clone(),
    })
}

/// Checks the four defining conditions of a lock tableau of content `a`:
/// (i) label `i` appears exactly once in each of the last `a_i` columns and
/// nowhere else, (ii) each label is at least its row index, (iii) cells with
/// a fixed label weakly descend left to right, and (iv) labels strictly
/// increase bottom to top within each column.
pub fn is_lock_tableau(labels: &BTreeMap<Cell, u32>, a: &WeakComposition) -> bool {
    satisfies_conditions(labels, a, true)
}

/// The relaxed variant: conditions (i)-(iii) plus the weaker column rule
/// (iv)': an out-of-order pair `i < j` with `i` above `j` in a column is
/// allowed only when an `i` appears in the next column strictly above that
/// `j`.
pub fn is_lock_tableau_relaxed(labels: &BTreeMap<Cell, u32>, a: &WeakComposition) -> bool {
    satisfies_conditions(labels, a, false)
}

fn satisfies_conditions(labels: &BTreeMap<Cell, u32>, a: &WeakComposition, strict: bool) -> bool {
    let max = a.parts().iter().copied().max().unwrap_or(0);
    // (i): columns of each label value match the right-justified row of `a`.
    for i in 1..=a.len() as u32 {
        let want: Vec<u32> = ((max - a.part(i as usize) + 1)..=max).collect();
        let mut got: Vec<u32> = labels
            .iter()
            .filter(|&(_, &l)| l == i)
            .map(|(c, _)| c.col)
            .collect();
        got.sort_unstable();
        if got != want {
            return false;
        }
    }
    if labels.values().any(|&l| l == 0 || l as usize > a.len()) {
        return false;
    }
    // (ii): labels bounded below by row index.
    if labels.iter().any(|(c, &l)| l < c.row) {
        return false;
    }
    // (iii): cells with equal label weakly descend left to right.
    for i in 1..=a.len() as u32 {
        let mut cells: Vec<Cell> = labels
            .iter()
            .filter(|&(_, &l)| l == i)
            .map(|(c, _)| *c)
            .collect();
        cells.sort_by_key(|c| c.col);
        if cells.windows(2).any(|w| w[1].row > w[0].row) {
            return false;
        }
    }
    // (iv) / (iv)': column order rule.
    let mut by_col: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
    for (c, &l) in labels {
        by_col.entry(c.col).or_default().push((c.row, l));
    }
    for (col, cells) in &by_col {
        for &(r1, l1) in cells {
            for &(r2, l2) in cells {
                // An inversion: the smaller label sits above the larger.
                if r1 > r2 && l1 < l2 {
                    if strict {
                        return false;
                    }
                    let rescued = labels
                        .iter()
                        .any(|(c, &l)| c.col == *col + 1 && l == l1 && c.row > r2);
                    if !rescued {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True when for each nonempty row `i` either some cell of row `i` has label
/// `i`, or some cell of row `i+1` lies weakly right of a cell of row `i`.
pub fn is_quasi_yamanouchi(t: &LockTableau) -> bool {
    let d = t.diagram();
    for i in 1..=d.height() {
        let row: Vec<Cell> = d.row(i).collect();
        if row.is_empty() {
            continue;
        }
        if row.iter().any(|c| t.labels[c] == i) {
            continue;
        }
        let min_col = row.iter().map(|c| c.col).min().unwrap();
        let above_max = d.row(i + 1).map(|c| c.col).max();
        if above_max.map_or(true, |m| m < min_col) {
            return false;
        }
    }
    true
}

/// All lock tableaux of content `a`, one per member of the closure of the
/// right-justified diagram.
pub fn enumerate_lock_tableaux(a: &WeakComposition) -> Result<Vec<LockTableau>> {
    let set = enumerate_kd(&lock_diagram(a))?;
    set.members().iter().map(|d| lock_label(d, a)).collect()
}

/// The quasi-Yamanouchi members of the lock tableaux of content `a`.
pub fn enumerate_qlt(a: &WeakComposition) -> Result<Vec<LockTableau>> {
    Ok(enumerate_lock_tableaux(a)?
        .into_iter()
        .filter(is_quasi_yamanouchi_ref)
        .collect())
}

fn is_quasi_yamanouchi_ref(t: &LockTableau) -> bool {
    is_quasi_yamanouchi(t)
}

/// A filling of the right-justified diagram of a strong composition with
/// rows weakly decreasing left to right and columns strictly decreasing top
/// to bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtendedTableau {
    shape: StrongComposition,
    entries: BTreeMap<Cell, u32>,
}

impl ExtendedTableau {
    /// The shape composition.
    pub fn shape(&self) -> &StrongComposition {
        &self.shape
    }

    /// The entry of each cell.
    pub fn entries(&self) -> &BTreeMap<Cell, u32> {
        &self.entries
    }

    /// Part `i` counts the cells with entry `i`.
    pub fn weight(&self) -> WeakComposition {
        let max = self.entries.values().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &e in self.entries.values() {
            counts[e as usize - 1] += 1;
        }
        WeakComposition::new(counts)
    }
}

/// Cells of the right-justified diagram of `alpha`, ordered column by column
/// from the left, top to bottom within a column (the order used by the
/// backtracking enumeration).
fn shape_cells(alpha: &StrongComposition) -> Vec<Cell> {
    let d = lock_diagram(&alpha.as_weak());
    let mut cells: Vec<Cell> = d.cells().to_vec();
    cells.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row)));
    cells
}

/// All fillings of the right-justified diagram of `alpha` with entries in
/// `{1..n}`, rows weakly decreasing left to right, columns strictly
/// decreasing top to bottom.
pub fn enumerate_sset(alpha: &StrongComposition, n: u32) -> Vec<ExtendedTableau> {
    let cells = shape_cells(alpha);
    let mut out = Vec::new();
    let mut entries: BTreeMap<Cell, u32> = BTreeMap::new();
    fn rec(
        cells: &[Cell],
        idx: usize,
        n: u32,
        entries: &mut BTreeMap<Cell, u32>,
        alpha: &StrongComposition,
        out: &mut Vec<ExtendedTableau>,
    ) {
        if idx == cells.len() {
            out.push(ExtendedTableau {
                shape: alpha.clone(),
                entries: entries.clone(),
            });
            return;
        }
        let cell = cells[idx];
        // Upper bound from the previous cell in the column (strict) and the
        // left neighbor (weak). Cells are ordered column by column, top to
        // bottom, so the nearest column predecessor is the last filled cell
        // of this column even across empty rows.
        let mut hi = n;
        if idx > 0 && cells[idx - 1].col == cell.col {
            hi = hi.min(entries[&cells[idx - 1]].saturating_sub(1));
        }
        if cell.col > 1 {
            if let Some(&left) = entries.get(&Cell::new(cell.row, cell.col - 1)) {
                hi = hi.min(left);
            }
        }
        for e in 1..=hi {
            entries.insert(cell, e);
            rec(cells, idx + 1, n, entries, alpha, out);
        }
        entries.remove(&cell);
    }
    rec(&cells, 0, n, &mut entries, alpha, &mut out);
    out
}

/// The standard fillings: entries `1..=|alpha|` each exactly once.
pub fn enumerate_set(alpha: &StrongComposition) -> Vec<ExtendedTableau> {
    let n = alpha.size() as u32;
    enumerate_sset(alpha, n)
        .into_iter()
        .filter(|t| {
            let mut seen: Vec<u32> = t.entries.values().copied().collect();
            seen.sort_unstable();
            seen == (1..=n).collect::<Vec<_>>()
        })
        .collect()
}

/// The super-standard filling: row `i` receives the next `alpha_i` integers,
/// decreasing left to right within the row.
pub fn super_standard(alpha: &StrongComposition) -> ExtendedTableau {
    let d = lock_diagram(&alpha.as_weak());
    let mut entries = BTreeMap::new();
    let mut next = 0u32;
    for r in 1..=d.height() {
        let mut row: Vec<Cell> = d.row(r).collect();
        row.sort_by_key(|c| std::cmp::Reverse(c.col));
        for cell in row {
            next += 1;
            entries.insert(cell, next);
        }
    }
    ExtendedTableau {
        shape: alpha.clone(),
        entries,
    }
}

/// The descent composition of a standard filling: runs of consecutive
/// entries split after each `i` whose successor `i+1` sits in a strictly
/// higher row (entries within a row increase right to left, so a row never
/// breaks a run).
pub fn descent_composition(t: &ExtendedTableau) -> Result<StrongComposition> {
    let n = t.entries.len() as u32;
    let mut row_of = vec![0u32; n as usize + 1];
    let mut seen = vec![false; n as usize + 1];
    for (cell, &e) in &t.entries {
        if e == 0 || e > n || seen[e as usize] {
            return Err(Error::NotStandard);
        }
        seen[e as usize] = true;
        row_of[e as usize] = cell.row;
    }
    let mut parts = Vec::new();
    let mut run = 0u32;
    for i in 1..=n {
        run += 1;
        if i == n || row_of[i as usize + 1] > row_of[i as usize] {
            parts.push(run);
            run = 0;
        }
    }
    if parts.is_empty() {
        return Ok(StrongComposition::empty());
    }
    StrongComposition::new(parts)
}

/// Grid rendering with entries in place of cells: single digits directly,
/// multi-digit entries bracketed, `.` for gaps.
pub fn format_tableau(entries: &BTreeMap<Cell, u32>) -> String {
    if entries.is_empty() {
        return String::new();
    }
    let height = entries.keys().map(|c| c.row).max().unwrap();
    let width = entries.keys().map(|c| c.col).max().unwrap();
    let mut out = String::new();
    for r in (1..=height).rev() {
        for c in 1..=width {
            match entries.get(&Cell::new(r, c)) {
                Some(&e) if e <= 9 => out.push_str(&e.to_string()),
                Some(&e) => out.push_str(&format!("[{e}]")),
                None => out.push('.'),
            }
        }
        out.push('\n');
    }
    out
}
