//! Permutations, codes, Rothe diagrams, essential sets, accessible boxes,
//! pivots and vexillarity.
//!
//! Permutations are maps on the positive integers fixing all but finitely
//! many points. A value is stored as its one-line window `w(1..=m)`,
//! normalized by stripping trailing fixed points, so that equality agrees
//! with the stable inclusion of symmetric groups.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// A box in matrix coordinates: `row` counts from the top, `col` from the
/// left, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A permutation of the positive integers fixing all but finitely many
/// points, stored by its normalized one-line window.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    /// The identity permutation (empty window).
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// Builds a permutation from one-line notation `w(1), ..., w(m)`.
    ///
    /// The window must be a rearrangement of `1..=m`; anything else cannot
    /// extend to a bijection that fixes all points beyond `m`. Trailing
    /// fixed points are stripped so `[3,1,2,4]` and `[3,1,2]` compare equal.
    pub fn from_window(window: Vec<usize>) -> Result<Self, Error> {
        let m = window.len();
        let mut seen = vec![false; m];
        for &v in &window {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::InvalidWindow(m));
            }
            seen[v - 1] = true;
        }
        let mut window = window;
        while window.last().is_some_and(|&v| v == window.len()) {
            window.pop();
        }
        Ok(Permutation { window })
    }

    /// The normalized window. Empty for the identity.
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Length of the normalized window; every point beyond it is fixed.
    pub fn window_len(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// `w(i)` for any positive `i`.
    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        if i <= self.window.len() {
            self.window[i - 1]
        } else {
            i
        }
    }

    /// `w^{-1}(j)` for any positive `j`.
    pub fn inverse_apply(&self, j: usize) -> usize {
        debug_assert!(j >= 1);
        for (idx, &v) in self.window.iter().enumerate() {
            if v == j {
                return idx + 1;
            }
        }
        j
    }

    /// Right multiplication by the adjacent transposition `s_i`, i.e. swap of
    /// the entries in positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let m = self.window.len().max(i + 1);
        let mut w: Vec<usize> = (1..=m).map(|p| self.apply(p)).collect();
        w.swap(i - 1, i);
        Permutation::from_window(w).expect("swapping positions preserves the window")
    }

    /// Number of inversions.
    pub fn inversions(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The Lehmer-style code: entry `i` counts boxes in row `i` of the Rothe
    /// diagram, with trailing zeroes removed.
    pub fn code(&self) -> Code {
        let w = &self.window;
        let mut entries = Vec::with_capacity(w.len());
        for i in 0..w.len() {
            let mut c = 0;
            for j in i + 1..w.len() {
                if w[j] < w[i] {
                    c += 1;
                }
            }
            entries.push(c);
        }
        Code::new(entries)
    }

    /// The Rothe diagram `{(i,j) : j < w(i), i < w^{-1}(j)}` inside an
    /// `n x n` grid. Fails when the grid cannot hold the whole diagram.
    pub fn rothe_diagram(&self, n: usize) -> Result<Diagram, Error> {
        let needed = self.window.len();
        if n < needed {
            return Err(Error::GridTooSmall { given: n, needed });
        }
        let mut cells = BTreeSet::new();
        for i in 1..=self.window.len() {
            for j in 1..self.apply(i) {
                if self.inverse_apply(j) > i {
                    cells.insert(Cell::new(i, j));
                }
            }
        }
        Ok(Diagram { n, cells })
    }

    /// Rothe diagram in the default grid, sized by the normalized window.
    pub fn rothe(&self) -> Diagram {
        self.rothe_diagram(self.window.len())
            .expect("window length always fits its own diagram")
    }

    /// Rows `r` with `(r, col)` in the Rothe diagram, without materializing
    /// the grid. Runs in time linear in the window length.
    pub fn rothe_column_rows(&self, col: usize) -> Vec<usize> {
        let mut rows = Vec::new();
        for r in 1..=self.window.len() {
            if self.window[r - 1] == col {
                break;
            }
            if self.window[r - 1] > col {
                rows.push(r);
            }
        }
        rows
    }

    /// Number of 132 patterns: triples `i < j < k` with
    /// `w(i) < w(k) < w(j)`. Cubic by definition; inputs are small.
    pub fn count_132(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                for k in j + 1..w.len() {
                    if w[i] < w[k] && w[k] < w[j] {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// True when the permutation avoids the 2143 pattern. Quadruple-loop
    /// scan; used as the independent cross-check for [`Code::is_vexillary`].
    pub fn avoids_2143(&self) -> bool {
        let w = &self.window;
        let m = w.len();
        for i in 0..m {
            for j in i + 1..m {
                if w[j] >= w[i] {
                    continue;
                }
                for k in j + 1..m {
                    for l in k + 1..m {
                        if w[l] < w[k] && w[i] < w[l] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "id");
        }
        if self.window.len() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// The code of a permutation: nonnegative entries, truncated so the last
/// entry is positive (the identity has the empty code).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    entries: Vec<usize>,
}

impl Code {
    /// Normalizes by removing trailing zeroes.
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Code { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of rows carrying boxes; `L` in the input convention.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of boxes of the Rothe diagram, i.e. the length of the
    /// permutation.
    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Reconstructs the permutation with this code: `w(i)` is the
    /// `(c_i + 1)`-th smallest positive integer unused so far. Every code is
    /// realizable; the loop is quadratic in the window length.
    pub fn to_permutation(&self) -> Permutation {
        let l = self.entries.len();
        if l == 0 {
            return Permutation::identity();
        }
        let max_val = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, c)| i + 1 + c)
            .max()
            .unwrap();
        let mut used = vec![false; max_val + 1];
        let mut window = Vec::with_capacity(max_val);
        for &c in &self.entries {
            let mut remaining = c;
            let mut v = 0;
            for (cand, &u) in used.iter().enumerate().skip(1) {
                if !u {
                    if remaining == 0 {
                        v = cand;
                        break;
                    }
                    remaining -= 1;
                }
            }
            used[v] = true;
            window.push(v);
        }
        for (cand, &u) in used.iter().enumerate().skip(1) {
            if !u {
                window.push(cand);
            }
        }
        Permutation::from_window(window).expect("code reconstruction yields a window")
    }

    /// The accessible box: southmost-then-eastmost member of the essential
    /// set outside the dominant component, or `None` for dominant
    /// permutations. Computed from the window in `O(L^2)` without building
    /// the grid.
    pub fn accessible_box(&self) -> Option<Cell> {
        let w = self.to_permutation();
        let l = self.entries.len();
        // Row-prefix minima of the window bound the dominant component:
        // row i of Dom covers columns 1..min w(1..=i) - 1.
        let mut best: Option<Cell> = None;
        let mut used: Vec<usize> = Vec::with_capacity(l); // sorted window prefix
        let mut prefix_min = usize::MAX;
        for i in 1..=l {
            let wi = w.apply(i);
            prefix_min = prefix_min.min(wi);
            let pos = used.partition_point(|&v| v < wi);
            used.insert(pos, wi);
            // Eastmost box column in row i: largest j < w(i) unused so far.
            let mut cand = wi - 1;
            let mut p = used.partition_point(|&v| v <= cand);
            while cand >= 1 && p >= 1 && used[p - 1] == cand {
                cand -= 1;
                p -= 1;
            }
            if cand >= 1 && cand > prefix_min.saturating_sub(1) {
                best = Some(Cell::new(i, cand));
            }
        }
        best
    }

    /// The essential set straight from the code, in `O(L^2)` and without
    /// materializing the grid: per row, the run-end columns of the box set
    /// that have no box directly below. Rows are ascending; columns within
    /// a row ascending.
    pub fn essential_set(&self) -> Vec<Cell> {
        let l = self.entries.len();
        let w = self.to_permutation();
        let mut used: std::collections::HashSet<usize> = std::collections::HashSet::new();
        let mut out = Vec::new();
        for i in 1..=l {
            let wi = w.apply(i);
            used.insert(wi);
            if self.entries[i - 1] == 0 {
                continue;
            }
            // Run-end columns of row i: q just left of a used value or of
            // the dot, with a box at q.
            let mut candidates: Vec<usize> = used
                .iter()
                .filter(|&&v| v >= 2)
                .map(|&v| v - 1)
                .filter(|&q| q < wi && !used.contains(&q))
                .collect();
            candidates.sort_unstable();
            candidates.dedup();
            for q in candidates {
                // Essential when no box sits directly below: row i+1 has a
                // box at q exactly when q is west of the next dot.
                let below = i < l && q < w.apply(i + 1);
                if !below {
                    out.push(Cell::new(i, q));
                }
            }
        }
        out
    }

    /// Vexillarity, i.e. 2143-pattern avoidance, by Fulton's criterion: the
    /// essential set must form a chain, with no box strictly northwest of
    /// another. `O(L^2)` from the code.
    pub fn is_vexillary(&self) -> bool {
        let essential = self.essential_set();
        // Cells arrive sorted by (row, col). For each new strictly-lower
        // row, every column must stay weakly west of all earlier rows'
        // westmost essential column.
        let mut running_min = usize::MAX;
        let mut row_start = 0;
        while row_start < essential.len() {
            let row = essential[row_start].row;
            let mut row_end = row_start;
            while row_end < essential.len() && essential[row_end].row == row {
                row_end += 1;
            }
            let max_col = essential[row_end - 1].col;
            if max_col > running_min {
                return false;
            }
            running_min = running_min.min(essential[row_start].col);
            row_start = row_end;
        }
        true
    }

    /// Shape and flag of a vexillary permutation: the shape sorts the
    /// nonzero entries decreasingly; the flag sorts, increasingly, the
    /// values `e_i = max{ j >= i : c_j >= c_i }` taken over rows with
    /// `c_i != 0`.
    pub fn shape_and_flag(&self) -> Result<(Vec<usize>, Vec<usize>), Error> {
        if !self.is_vexillary() {
            return Err(Error::NotVexillary);
        }
        let c = &self.entries;
        let mut shape: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
        shape.sort_unstable_by(|a, b| b.cmp(a));
        let mut flag = Vec::with_capacity(shape.len());
        for i in 0..c.len() {
            if c[i] == 0 {
                continue;
            }
            let e = (i..c.len()).filter(|&j| c[j] >= c[i]).max().unwrap() + 1;
            flag.push(e);
        }
        flag.sort_unstable();
        Ok((shape, flag))
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The pivots of the accessible box `z`: dots `(i, w(i))` strictly northwest
/// of `z` that are maximally southeast among themselves.
pub fn pivots(w: &Permutation, z: Cell) -> Result<BTreeSet<Cell>, Error> {
    if w.code().accessible_box() != Some(z) {
        return Err(Error::NotAccessibleBox(z.row, z.col));
    }
    let candidates: Vec<Cell> = (1..z.row)
        .map(|i| Cell::new(i, w.apply(i)))
        .filter(|d| d.col < z.col)
        .collect();
    let maximal = candidates
        .iter()
        .filter(|d| {
            !candidates
                .iter()
                .any(|o| o.row > d.row && o.col > d.col)
        })
        .copied()
        .collect();
    Ok(maximal)
}

/// The grassmannian permutation of a partition, `w(i) = i + lambda_{L-i+1}`.
/// Its code is the reversed partition.
pub fn grassmannian_for(shape: &[usize]) -> Permutation {
    let l = shape.len();
    debug_assert!(shape.windows(2).all(|p| p[0] >= p[1]));
    if l == 0 || shape[0] == 0 {
        return Permutation::identity();
    }
    let m = l + shape[0];
    let mut window = Vec::with_capacity(m);
    let mut used = vec![false; m + 1];
    for i in 1..=l {
        let v = i + shape[l - i];
        window.push(v);
        used[v] = true;
    }
    for (v, &u) in used.iter().enumerate().skip(1) {
        if !u {
            window.push(v);
        }
    }
    Permutation::from_window(window).expect("grassmannian window")
}

/// A finite set of boxes inside an `n x n` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl Diagram {
    /// Empty diagram in an `n x n` grid.
    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            cells: BTreeSet::new(),
        }
    }

    pub fn from_cells<I>(n: usize, cells: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Cell>,
    {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        for c in &cells {
            if c.row == 0 || c.col == 0 || c.row > n || c.col > n {
                return Err(Error::GridTooSmall {
                    given: n,
                    needed: c.row.max(c.col),
                });
            }
        }
        Ok(Diagram { n, cells })
    }

    pub fn grid_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// Cells ordered column-major: by `(col, row)`. This is the canonical
    /// enumeration order used by the tableau oracles.
    pub fn cells_column_major(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.cells.iter().copied().collect();
        v.sort_by_key(|c| (c.col, c.row));
        v
    }

    /// Rows holding a box in the given column, ascending.
    pub fn column_rows(&self, col: usize) -> Vec<usize> {
        (1..=self.n)
            .filter(|&r| self.contains(Cell::new(r, col)))
            .collect()
    }

    /// Number of boxes per row, `1..=n`.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for c in &self.cells {
            counts[c.row - 1] += 1;
        }
        counts
    }

    /// When the diagram is the Young diagram of a partition (top-left
    /// justified rows of weakly decreasing length), returns that partition.
    pub fn partition_shape(&self) -> Option<Vec<usize>> {
        let counts = self.row_counts();
        let mut shape = Vec::new();
        for (i, &len) in counts.iter().enumerate() {
            for j in 1..=len {
                if !self.contains(Cell::new(i + 1, j)) {
                    return None;
                }
            }
            shape.push(len);
        }
        while shape.last() == Some(&0) {
            shape.pop();
        }
        if shape.windows(2).all(|p| p[0] >= p[1]) {
            Some(shape)
        } else {
            None
        }
    }

    /// The essential set: boxes with no box directly south nor directly
    /// east, i.e. the maximally-southeast box of each connected component.
    pub fn essential_set(&self) -> BTreeSet<Cell> {
        self.cells
            .iter()
            .filter(|c| {
                !self.contains(Cell::new(c.row + 1, c.col))
                    && !self.contains(Cell::new(c.row, c.col + 1))
            })
            .copied()
            .collect()
    }

    /// The connected component containing `(1,1)` (edge adjacency), empty
    /// when `(1,1)` is not a box.
    pub fn dominant_component(&self) -> Diagram {
        let start = Cell::new(1, 1);
        if !self.contains(start) {
            return Diagram::empty(self.n);
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(c) = stack.pop() {
            let mut neighbors = vec![
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col + 1),
            ];
            if c.row > 1 {
                neighbors.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                neighbors.push(Cell::new(c.row, c.col - 1));
            }
            for nb in neighbors {
                if self.contains(nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        Diagram {
            n: self.n,
            cells: seen,
        }
    }
}
