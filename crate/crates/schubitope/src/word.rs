//! Column words, the theta halfspace function of the Schubitope, the greedy
//! tableau, and brute-force lattice membership over all row subsets.
//!
//! For a diagram `D`, a column `c` and a row subset `S`, the column word
//! records one symbol per qualifying row, top to bottom: an opener for a
//! missing box on a row of `S`, a closer for a box off `S`, and a star for a
//! box on `S`. Brackets pair inside-out; stars are transparent to the
//! matching. `theta_D(S)` adds the stars and the matched pairs over all
//! columns, and those numbers are the right-hand sides of the Schubitope's
//! halfspace description.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::perm::{Cell, Diagram};
use crate::tableau::Tableau;

/// Largest grid size accepted by the subset brute force.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// A subset of `[n]`, stored as a bitmask. Only rows `1..=63` are
/// representable, far beyond the brute-force guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n < 64);
        Subset(((1u128 << n) - 1) as u64)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut mask = 0;
        for m in members {
            debug_assert!((1..64).contains(&m));
            mask |= 1 << (m - 1);
        }
        Subset(mask)
    }

    pub fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=64usize).filter(|&i| self.contains(i))
    }

    pub fn union(&self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn is_disjoint(&self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// All `2^n` subsets of `[n]`.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(n < 64);
        (0..(1u64 << n)).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One symbol of a column word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Open,
    Close,
    Star,
}

/// The word of one column: symbols top to bottom, one per qualifying row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnWord {
    symbols: Vec<Symbol>,
}

impl ColumnWord {
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Stars plus inside-out matched bracket pairs.
    pub fn theta(&self) -> usize {
        let mut stars = 0;
        let mut open_depth = 0usize;
        let mut pairs = 0;
        for s in &self.symbols {
            match s {
                Symbol::Star => stars += 1,
                Symbol::Open => open_depth += 1,
                Symbol::Close => {
                    if open_depth > 0 {
                        open_depth -= 1;
                        pairs += 1;
                    }
                }
            }
        }
        stars + pairs
    }
}

impl fmt::Display for ColumnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            match s {
                Symbol::Open => write!(f, "(")?,
                Symbol::Close => write!(f, ")")?,
                Symbol::Star => write!(f, "⋆")?,
            }
        }
        Ok(())
    }
}

/// The qualifying rows of one column together with their symbols.
fn column_entries(d: &Diagram, col: usize, s: Subset) -> Vec<(usize, Symbol)> {
    let n = d.grid_size();
    let mut entries = Vec::new();
    for row in 1..=n {
        let boxed = d.contains(Cell::new(row, col));
        let on = s.contains(row);
        match (boxed, on) {
            (false, true) => entries.push((row, Symbol::Open)),
            (true, false) => entries.push((row, Symbol::Close)),
            (true, true) => entries.push((row, Symbol::Star)),
            (false, false) => {}
        }
    }
    entries
}

/// The word of column `col` under the subset `s`.
pub fn column_word(d: &Diagram, col: usize, s: Subset) -> ColumnWord {
    ColumnWord {
        symbols: column_entries(d, col, s).into_iter().map(|(_, sym)| sym).collect(),
    }
}

/// `theta_D(S)`: total stars and matched pairs over all columns.
pub fn theta(d: &Diagram, s: Subset) -> usize {
    (1..=d.grid_size())
        .map(|col| column_word(d, col, s).theta())
        .sum()
}

/// The greedy tableau: stars keep their own row as label, matched closers
/// take the row of their opener, everything else stays unlabeled.
pub fn greedy_tableau(d: &Diagram, s: Subset) -> Tableau {
    let mut labels: BTreeMap<Cell, Option<usize>> = BTreeMap::new();
    for col in 1..=d.grid_size() {
        let mut stack: Vec<usize> = Vec::new();
        for (row, sym) in column_entries(d, col, s) {
            match sym {
                Symbol::Star => {
                    labels.insert(Cell::new(row, col), Some(row));
                }
                Symbol::Open => stack.push(row),
                Symbol::Close => {
                    let label = stack.pop();
                    labels.insert(Cell::new(row, col), label);
                }
            }
        }
    }
    Tableau::new(d.clone(), labels).expect("greedy labels cover the diagram")
}

/// Brute-force Schubitope membership for a lattice point: the degree
/// hyperplane plus every subset inequality, scanning all `2^n` subsets.
/// Refuses grids beyond the guard so callers fall back to the LP path.
pub fn membership_bruteforce(d: &Diagram, alpha: &[usize]) -> Result<bool, Error> {
    membership_bruteforce_with_limit(d, alpha, DEFAULT_SUBSET_LIMIT)
}

pub fn membership_bruteforce_with_limit(
    d: &Diagram,
    alpha: &[usize],
    limit: usize,
) -> Result<bool, Error> {
    let n = d.grid_size();
    if n > limit {
        return Err(Error::SubsetScanTooLarge(n, limit));
    }
    if alpha.iter().sum::<usize>() != d.len() {
        return Ok(false);
    }
    if alpha.iter().skip(n).any(|&a| a > 0) {
        return Ok(false);
    }
    for s in Subset::all(n) {
        let lhs: usize = s.iter().map(|i| alpha.get(i - 1).copied().unwrap_or(0)).sum();
        if lhs > theta(d, s) {
            return Ok(false);
        }
    }
    Ok(true)
}
