//! Tableaux on arbitrary diagrams and their enumeration oracles, plus
//! flagged semistandard Young tableaux and their row-count encoding.
//!
//! A tableau assigns to every box of a diagram either a value in `[n]` or
//! the unlabeled marker. The oracles here enumerate complete sets (flagged
//! column-injective, perfect, column-strict) in a fixed deterministic order:
//! cells column-major, labels ascending with unlabeled last. They exist to
//! cross-check the production LP path at desk scale, so budgets are strict
//! and overruns are typed errors.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::lp::LatticePoint;
use crate::perm::{Cell, Diagram};
use crate::word::Subset;

/// Default cap on diagram size for the enumeration oracles.
pub const DEFAULT_ENUM_CELLS: usize = 12;
/// Default cap on partition weight for flagged-tableau enumeration.
pub const DEFAULT_SSYT_WEIGHT: usize = 30;

/// A label: `Some(v)` for a value in `[n]`, `None` for the unlabeled box.
pub type Label = Option<usize>;

/// A tableau of some diagram shape: labels defined on exactly the cells of
/// the shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Diagram,
    labels: BTreeMap<Cell, Label>,
}

impl Tableau {
    /// Builds a tableau; the label map must cover exactly the shape's cells.
    pub fn new(shape: Diagram, labels: BTreeMap<Cell, Label>) -> Result<Self, Error> {
        if labels.len() != shape.len() || !labels.keys().all(|c| shape.contains(*c)) {
            return Err(Error::InfeasiblePoint("labels must cover exactly the shape"));
        }
        Ok(Tableau { shape, labels })
    }

    /// The all-unlabeled tableau of a shape.
    pub fn unlabeled(shape: Diagram) -> Self {
        let labels = shape.cells().map(|c| (c, None)).collect();
        Tableau { shape, labels }
    }

    pub fn shape(&self) -> &Diagram {
        &self.shape
    }

    pub fn label(&self, cell: Cell) -> Label {
        self.labels.get(&cell).copied().flatten()
    }

    pub fn labels(&self) -> impl Iterator<Item = (Cell, Label)> + '_ {
        self.labels.iter().map(|(c, l)| (*c, *l))
    }

    /// Number of labeled boxes.
    pub fn labeled_count(&self) -> usize {
        self.labels.values().filter(|l| l.is_some()).count()
    }

    /// `#tau^{-1}(S)`: boxes whose label lies in the subset.
    pub fn preimage_count(&self, s: Subset) -> usize {
        self.labels
            .values()
            .filter(|l| l.is_some_and(|v| s.contains(v)))
            .count()
    }

    /// Content vector of length `len`: entry `i` counts boxes labeled `i+1`.
    pub fn content(&self, len: usize) -> Vec<usize> {
        let mut counts = vec![0usize; len];
        for l in self.labels.values().flatten() {
            if *l >= 1 && *l <= len {
                counts[*l - 1] += 1;
            }
        }
        counts
    }

    /// Flagged: every label is at most its row index.
    pub fn is_flagged(&self) -> bool {
        self.labels
            .iter()
            .all(|(c, l)| l.is_none_or(|v| v <= c.row))
    }

    /// Column-injective: no repeated label within a column.
    pub fn is_column_injective(&self) -> bool {
        for col in 1..=self.shape.grid_size() {
            let mut seen = Vec::new();
            for row in self.shape.column_rows(col) {
                if let Some(v) = self.label(Cell::new(row, col)) {
                    if seen.contains(&v) {
                        return false;
                    }
                    seen.push(v);
                }
            }
        }
        true
    }

    /// Perfect: flagged, column-injective and no unlabeled box.
    pub fn is_perfect(&self) -> bool {
        self.labels.values().all(|l| l.is_some())
            && self.is_flagged()
            && self.is_column_injective()
    }

    /// Column-strict: labels strictly increase down each column (unlabeled
    /// boxes are ignored).
    pub fn is_column_strict(&self) -> bool {
        for col in 1..=self.shape.grid_size() {
            let mut prev: Option<usize> = None;
            for row in self.shape.column_rows(col) {
                if let Some(v) = self.label(Cell::new(row, col)) {
                    if prev.is_some_and(|p| p >= v) {
                        return false;
                    }
                    prev = Some(v);
                }
            }
        }
        true
    }

    /// Whether the tableau exhausts `alpha` over `S`:
    /// `sum_{i in S} alpha_i <= #tau^{-1}(S)`.
    pub fn exhausts(&self, alpha: &[usize], s: Subset) -> bool {
        let lhs: usize = s.iter().map(|i| alpha.get(i - 1).copied().unwrap_or(0)).sum();
        lhs <= self.preimage_count(s)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.shape.grid_size();
        for row in 1..=n {
            for col in 1..=n {
                let cell = Cell::new(row, col);
                if self.shape.contains(cell) {
                    match self.label(cell) {
                        Some(v) if v <= 9 => write!(f, "{v}")?,
                        Some(v) => write!(f, "[{v}]")?,
                        None => write!(f, "o")?,
                    }
                } else {
                    write!(f, "·")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_budget(d: &Diagram, budget: usize) -> Result<(), Error> {
    if d.len() > budget {
        return Err(Error::BudgetExceeded {
            what: "diagram cells for tableau enumeration",
            need: d.len(),
            limit: budget,
        });
    }
    Ok(())
}

/// Enumerates the flagged column-injective tableaux of a diagram, optionally
/// restricted to a fixed content vector. Deterministic order: boxes
/// column-major, label choices ascending, unlabeled last.
pub fn enumerate_fcitab(d: &Diagram, content: Option<&[usize]>) -> Result<Vec<Tableau>, Error> {
    enumerate_fcitab_with_budget(d, content, DEFAULT_ENUM_CELLS)
}

pub fn enumerate_fcitab_with_budget(
    d: &Diagram,
    content: Option<&[usize]>,
    budget: usize,
) -> Result<Vec<Tableau>, Error> {
    check_budget(d, budget)?;
    let n = d.grid_size();
    if let Some(alpha) = content {
        if alpha.iter().skip(n).any(|&a| a > 0) {
            return Ok(Vec::new()); // labels above n are impossible
        }
    }
    let cells = d.cells_column_major();
    let mut quota: Option<Vec<usize>> = content.map(|alpha| {
        (0..n).map(|i| alpha.get(i).copied().unwrap_or(0)).collect()
    });
    let needed: usize = quota.as_ref().map(|q| q.iter().sum()).unwrap_or(0);
    let mut assigned: Vec<Label> = Vec::with_capacity(cells.len());
    let mut out = Vec::new();
    dfs_fcitab(d, &cells, &mut assigned, &mut quota, needed, &mut out);
    Ok(out)
}

fn dfs_fcitab(
    d: &Diagram,
    cells: &[Cell],
    assigned: &mut Vec<Label>,
    quota: &mut Option<Vec<usize>>,
    needed: usize,
    out: &mut Vec<Tableau>,
) {
    let idx = assigned.len();
    if idx == cells.len() {
        if quota.as_ref().is_some_and(|q| q.iter().any(|&r| r > 0)) {
            return;
        }
        let labels = cells.iter().copied().zip(assigned.iter().copied()).collect();
        out.push(Tableau {
            shape: d.clone(),
            labels,
        });
        return;
    }
    // Content-restricted runs cannot finish if fewer boxes remain than
    // labels still owed.
    if let Some(q) = quota.as_ref() {
        let owed: usize = q.iter().sum();
        if owed > cells.len() - idx {
            return;
        }
    }
    let _ = needed;
    let cell = cells[idx];
    let column_used: Vec<usize> = (0..idx)
        .filter(|&k| cells[k].col == cell.col)
        .filter_map(|k| assigned[k])
        .collect();
    for v in 1..=cell.row {
        if column_used.contains(&v) {
            continue;
        }
        if let Some(q) = quota.as_mut() {
            if q[v - 1] == 0 {
                continue;
            }
            q[v - 1] -= 1;
            assigned.push(Some(v));
            dfs_fcitab(d, cells, assigned, quota, needed, out);
            assigned.pop();
            quota.as_mut().unwrap()[v - 1] += 1;
        } else {
            assigned.push(Some(v));
            dfs_fcitab(d, cells, assigned, quota, needed, out);
            assigned.pop();
        }
    }
    assigned.push(None);
    dfs_fcitab(d, cells, assigned, quota, needed, out);
    assigned.pop();
}

/// Perfect tableaux of content `alpha`: the content-restricted flagged
/// column-injective tableaux with no unlabeled box. Empty whenever the
/// content does not sum to the number of boxes.
pub fn enumerate_perfect(d: &Diagram, alpha: &[usize]) -> Result<Vec<Tableau>, Error> {
    enumerate_perfect_with_budget(d, alpha, DEFAULT_ENUM_CELLS)
}

pub fn enumerate_perfect_with_budget(
    d: &Diagram,
    alpha: &[usize],
    budget: usize,
) -> Result<Vec<Tableau>, Error> {
    if alpha.iter().sum::<usize>() != d.len() {
        return Ok(Vec::new());
    }
    let all = enumerate_fcitab_with_budget(d, Some(alpha), budget)?;
    Ok(all.into_iter().filter(|t| t.is_perfect()).collect())
}

/// Perfect tableaux that in addition increase strictly down each column.
pub fn enumerate_column_strict(d: &Diagram, alpha: &[usize]) -> Result<Vec<Tableau>, Error> {
    enumerate_column_strict_with_budget(d, alpha, DEFAULT_ENUM_CELLS)
}

pub fn enumerate_column_strict_with_budget(
    d: &Diagram,
    alpha: &[usize],
    budget: usize,
) -> Result<Vec<Tableau>, Error> {
    let perfect = enumerate_perfect_with_budget(d, alpha, budget)?;
    Ok(perfect.into_iter().filter(|t| t.is_column_strict()).collect())
}

/// Rebuilds the column-strict perfect tableau encoded by a 0/1 point of the
/// tableau polytope: per column, the rows holding boxes map
/// order-preservingly onto the values switched on in that column.
pub fn tableau_from_integral_point(d: &Diagram, point: &LatticePoint) -> Result<Tableau, Error> {
    let n = d.grid_size();
    if point.n != n {
        return Err(Error::InfeasiblePoint("point grid size mismatch"));
    }
    let mut labels = BTreeMap::new();
    for col in 1..=n {
        let rows = d.column_rows(col);
        let values: Vec<usize> = (1..=n).filter(|&i| point.get(i, col) == 1).collect();
        if rows.len() != values.len() {
            return Err(Error::InfeasiblePoint(
                "column sums do not match the column box counts",
            ));
        }
        for (&row, &value) in rows.iter().zip(values.iter()) {
            if value > row {
                return Err(Error::InfeasiblePoint("flag conditions violated"));
            }
            labels.insert(Cell::new(row, col), Some(value));
        }
    }
    Tableau::new(d.clone(), labels)
}

/// A semistandard Young tableau of partition shape, flagged row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlaggedSsyt {
    rows: Vec<Vec<usize>>,
}

impl FlaggedSsyt {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Content vector of length `len`.
    pub fn content(&self, len: usize) -> Vec<usize> {
        let mut counts = vec![0usize; len];
        for row in &self.rows {
            for &v in row {
                if v >= 1 && v <= len {
                    counts[v - 1] += 1;
                }
            }
        }
        counts
    }

    pub fn max_entry(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for FlaggedSsyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Enumerates `SSYT(lambda, phi)`: semistandard tableaux of shape `lambda`
/// whose row-`i` entries are at most `phi_i`, optionally restricted to a
/// content vector.
pub fn enumerate_flagged_ssyt(
    shape: &[usize],
    flag: &[usize],
    content: Option<&[usize]>,
) -> Result<Vec<FlaggedSsyt>, Error> {
    enumerate_flagged_ssyt_with_budget(shape, flag, content, DEFAULT_SSYT_WEIGHT)
}

pub fn enumerate_flagged_ssyt_with_budget(
    shape: &[usize],
    flag: &[usize],
    content: Option<&[usize]>,
    budget: usize,
) -> Result<Vec<FlaggedSsyt>, Error> {
    let weight: usize = shape.iter().sum();
    if weight > budget {
        return Err(Error::BudgetExceeded {
            what: "partition weight for tableau enumeration",
            need: weight,
            limit: budget,
        });
    }
    debug_assert!(shape.windows(2).all(|p| p[0] >= p[1]));
    debug_assert_eq!(shape.len(), flag.len());
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut quota: Option<Vec<usize>> = content.map(|c| c.to_vec());
    let mut out = Vec::new();
    dfs_ssyt(shape, flag, 0, 0, &mut rows, &mut quota, &mut out);
    Ok(out)
}

fn dfs_ssyt(
    shape: &[usize],
    flag: &[usize],
    row: usize,
    col: usize,
    rows: &mut Vec<Vec<usize>>,
    quota: &mut Option<Vec<usize>>,
    out: &mut Vec<FlaggedSsyt>,
) {
    if row == shape.len() {
        if quota.as_ref().is_some_and(|q| q.iter().any(|&r| r > 0)) {
            return;
        }
        out.push(FlaggedSsyt { rows: rows.clone() });
        return;
    }
    if col == shape[row] {
        dfs_ssyt(shape, flag, row + 1, 0, rows, quota, out);
        return;
    }
    let mut lo = 1;
    if col > 0 {
        lo = lo.max(rows[row][col - 1]);
    }
    if row > 0 {
        lo = lo.max(rows[row - 1][col] + 1);
    }
    let hi = flag[row];
    for v in lo..=hi {
        if let Some(q) = quota.as_mut() {
            if v > q.len() || q[v - 1] == 0 {
                continue;
            }
            q[v - 1] -= 1;
        }
        rows[row][col] = v;
        dfs_ssyt(shape, flag, row, col + 1, rows, quota, out);
        rows[row][col] = 0;
        if let Some(q) = quota.as_mut() {
            q[v - 1] += 1;
        }
    }
}

/// The row-count encoding of a row-weakly-increasing tableau: entry `(i,j)`
/// counts the `j`'s in row `i`.
pub fn row_count_matrix(t: &FlaggedSsyt, size: usize) -> Vec<Vec<usize>> {
    let mut r = vec![vec![0usize; size]; size];
    for (i, row) in t.rows().iter().enumerate() {
        for &v in row {
            r[i][v - 1] += 1;
        }
    }
    r
}

/// Checks that a square matrix is `R(T)` for some `T` in
/// `SSYT(lambda, phi)`: flag zeroes, row sums equal to the shape, and the
/// column-strictness inequalities between consecutive rows.
pub fn validate_row_count_matrix(r: &[Vec<usize>], shape: &[usize], flag: &[usize]) -> bool {
    let size = r.len();
    if r.iter().any(|row| row.len() != size) || shape.len() > size {
        return false;
    }
    for i in 0..size {
        let expected = shape.get(i).copied().unwrap_or(0);
        let sum: usize = r[i].iter().sum();
        if sum != expected {
            return false;
        }
        if i < shape.len() {
            for (j, &entry) in r[i].iter().enumerate() {
                if j + 1 > flag[i] && entry != 0 {
                    return false;
                }
            }
        }
    }
    for i in 0..size.saturating_sub(1) {
        for j in 1..=size {
            let below: usize = r[i + 1][..j].iter().sum();
            let above: usize = r[i][..j - 1].iter().sum();
            if below > above {
                return false;
            }
        }
    }
    true
}

/// Decodes an accepted row-count matrix into its unique row-weakly-increasing
/// tableau.
pub fn decode_row_count_matrix(r: &[Vec<usize>]) -> FlaggedSsyt {
    let mut rows = Vec::new();
    for counts in r {
        let mut row = Vec::new();
        for (j, &cnt) in counts.iter().enumerate() {
            row.extend(std::iter::repeat_n(j + 1, cnt));
        }
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    FlaggedSsyt { rows }
}
