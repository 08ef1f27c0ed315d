//! Phase-1 simplex over exact rationals with implicit variable bounds.
//!
//! The solver decides feasibility of `M x (<=|=) b` and returns a basic
//! feasible solution. Single-variable rows are folded into variable bounds
//! during preprocessing, so the box constraints of the tableau polytopes
//! never enter the tableau; rows made redundant by the bounds are dropped
//! by exact interval arithmetic. The pivot rule is steepest reduced cost
//! with index tie-breaks, falling back to Bland's rule after a degenerate
//! streak so cycling is impossible. Every number is an exact rational; a
//! returned point is a vertex of the input polyhedron.

use num::{One, Signed, Zero};

use super::{FeasibilitySystem, Rational, RowKind};

const BLAND_TRIGGER: usize = 32;

/// Sparse constraint coefficients, sorted by column.
type SparseRow = Vec<(usize, Rational)>;
type PreparedRow = (SparseRow, RowKind, Rational);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    AtLower,
    AtUpper,
    Basic,
}

#[derive(Debug, Clone)]
enum VarMap {
    /// `x = y_col + shift`, `y` in `[0, upper]`.
    Shifted { col: usize, shift: Rational },
    /// `x = shift - y_col`, `y` in `[0, upper]`.
    Flipped { col: usize, shift: Rational },
    /// Free variable `x = y_pos - y_neg`.
    Split { pos: usize, neg: usize },
}

struct Prepared {
    maps: Vec<VarMap>,
    uppers: Vec<Option<Rational>>,
    rows: Vec<PreparedRow>,
}

/// Upper value of a sparse expression over the box `0 <= y <= u`;
/// `None` means unbounded above.
fn box_max(coeffs: &[(usize, Rational)], uppers: &[Option<Rational>]) -> Option<Rational> {
    let mut total = Rational::zero();
    for (col, c) in coeffs {
        if c.is_positive() {
            total += c * uppers[*col].as_ref()?;
        }
    }
    Some(total)
}

fn box_min(coeffs: &[(usize, Rational)], uppers: &[Option<Rational>]) -> Option<Rational> {
    let mut total = Rational::zero();
    for (col, c) in coeffs {
        if c.is_negative() {
            total += c * uppers[*col].as_ref()?;
        }
    }
    Some(total)
}

/// Folds singleton rows into bounds, rewrites everything over shifted
/// nonnegative variables, and drops rows the bounds already imply.
/// Returns `None` on proven infeasibility.
fn prepare(sys: &FeasibilitySystem) -> Option<Prepared> {
    let n = sys.num_vars;
    let mut lo: Vec<Option<Rational>> = vec![None; n];
    let mut hi: Vec<Option<Rational>> = vec![None; n];
    let mut general: Vec<PreparedRow> = Vec::new();

    for row in &sys.rows {
        let coeffs: Vec<(usize, Rational)> = row
            .coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .cloned()
            .collect();
        match coeffs.len() {
            0 => {
                let ok = match row.kind {
                    RowKind::Le => Rational::zero() <= row.rhs,
                    RowKind::Eq => row.rhs.is_zero(),
                };
                if !ok {
                    return None;
                }
            }
            1 => {
                let (j, a) = (coeffs[0].0, &coeffs[0].1);
                let bound = &row.rhs / a;
                let tighten_hi = |hi: &mut Option<Rational>, b: &Rational| {
                    if hi.as_ref().is_none_or(|old| b < old) {
                        *hi = Some(b.clone());
                    }
                };
                let tighten_lo = |lo: &mut Option<Rational>, b: &Rational| {
                    if lo.as_ref().is_none_or(|old| b > old) {
                        *lo = Some(b.clone());
                    }
                };
                match row.kind {
                    RowKind::Le if a.is_positive() => tighten_hi(&mut hi[j], &bound),
                    RowKind::Le => tighten_lo(&mut lo[j], &bound),
                    RowKind::Eq => {
                        tighten_hi(&mut hi[j], &bound);
                        tighten_lo(&mut lo[j], &bound);
                    }
                }
            }
            _ => general.push((coeffs, row.kind, row.rhs.clone())),
        }
    }
    for j in 0..n {
        if let (Some(l), Some(h)) = (&lo[j], &hi[j]) {
            if l > h {
                return None;
            }
        }
    }

    // Rewrite variables so every column lives in [0, upper].
    let mut maps = Vec::with_capacity(n);
    let mut uppers: Vec<Option<Rational>> = Vec::new();
    for j in 0..n {
        match (&lo[j], &hi[j]) {
            (Some(l), Some(h)) => {
                maps.push(VarMap::Shifted {
                    col: uppers.len(),
                    shift: l.clone(),
                });
                uppers.push(Some(h - l));
            }
            (Some(l), None) => {
                maps.push(VarMap::Shifted {
                    col: uppers.len(),
                    shift: l.clone(),
                });
                uppers.push(None);
            }
            (None, Some(h)) => {
                maps.push(VarMap::Flipped {
                    col: uppers.len(),
                    shift: h.clone(),
                });
                uppers.push(None);
            }
            (None, None) => {
                let pos = uppers.len();
                uppers.push(None);
                uppers.push(None);
                maps.push(VarMap::Split { pos, neg: pos + 1 });
            }
        }
    }

    let mut rows: Vec<PreparedRow> = Vec::new();
    let mut last_kept_le: Option<usize> = None;
    for (coeffs, kind, rhs) in general {
        let mut new_coeffs: Vec<(usize, Rational)> = Vec::with_capacity(coeffs.len() + 1);
        let mut new_rhs = rhs;
        for (j, a) in coeffs {
            match &maps[j] {
                VarMap::Shifted { col, shift } => {
                    new_rhs -= &a * shift;
                    new_coeffs.push((*col, a));
                }
                VarMap::Flipped { col, shift } => {
                    new_rhs -= &a * shift;
                    new_coeffs.push((*col, -a));
                }
                VarMap::Split { pos, neg } => {
                    new_coeffs.push((*pos, a.clone()));
                    new_coeffs.push((*neg, -a));
                }
            }
        }
        new_coeffs.sort_by_key(|&(c, _)| c);

        let maxv = box_max(&new_coeffs, &uppers);
        let minv = box_min(&new_coeffs, &uppers);
        match kind {
            RowKind::Le => {
                if minv.is_some_and(|m| m > new_rhs) {
                    return None;
                }
                if maxv.as_ref().is_some_and(|m| *m <= new_rhs) {
                    continue; // implied by the box
                }
                // A row dominated by the previously kept row (given the box)
                // carries no information; this catches the long runs of
                // repeated prefix inequalities in the compressed systems.
                if let Some(prev_idx) = last_kept_le {
                    let (prev, _, prev_rhs) = &rows[prev_idx];
                    let diff = sparse_sub(&new_coeffs, prev);
                    if let Some(dmax) = box_max(&diff, &uppers) {
                        if dmax <= &new_rhs - prev_rhs {
                            continue;
                        }
                    }
                }
                last_kept_le = Some(rows.len());
                rows.push((new_coeffs, RowKind::Le, new_rhs));
            }
            RowKind::Eq => {
                if minv.as_ref().is_some_and(|m| *m > new_rhs)
                    || maxv.as_ref().is_some_and(|m| *m < new_rhs)
                {
                    return None;
                }
                if minv.is_some_and(|m| m == new_rhs)
                    && maxv.is_some_and(|m| m == new_rhs)
                {
                    continue; // pinned by the box already
                }
                rows.push((new_coeffs, RowKind::Eq, new_rhs));
            }
        }
    }

    Some(Prepared { maps, uppers, rows })
}

fn sparse_sub(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                let v = va - vb;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (Some(_), Some((cb, vb))) => {
                out.push((*cb, -vb));
                j += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -vb));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub(super) fn phase_one(sys: &FeasibilitySystem) -> Option<Vec<Rational>> {
    let Prepared { maps, uppers, rows } = prepare(sys)?;
    let solution = solve_prepared(&uppers, rows)?;
    // Undo the variable rewriting.
    let mut x = Vec::with_capacity(sys.num_vars);
    for map in &maps {
        let v = match map {
            VarMap::Shifted { col, shift } => &solution[*col] + shift,
            VarMap::Flipped { col, shift } => shift - &solution[*col],
            VarMap::Split { pos, neg } => &solution[*pos] - &solution[*neg],
        };
        x.push(v);
    }
    Some(x)
}

/// The bounded-variable phase-1 simplex proper, over columns in
/// `[0, upper]`. Returns the column values of a basic feasible solution.
fn solve_prepared(col_uppers: &[Option<Rational>], rows: Vec<PreparedRow>) -> Option<Vec<Rational>> {
    let structural = col_uppers.len();
    if rows.is_empty() {
        return Some(vec![Rational::zero(); structural]);
    }
    let nrows = rows.len();
    let slack_count = rows.iter().filter(|(_, k, _)| *k == RowKind::Le).count();
    let total_cols = structural + slack_count + nrows; // worst case artificials
    let mut upper: Vec<Option<Rational>> = col_uppers.to_vec();
    upper.resize(total_cols, None);
    let mut is_artificial = vec![false; total_cols];

    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(nrows);
    let mut rhs: Vec<Rational> = Vec::with_capacity(nrows);
    let mut basis: Vec<usize> = Vec::with_capacity(nrows);
    let mut next_col = structural;
    let mut artificial_rows: Vec<usize> = Vec::new();

    for (coeffs, kind, b) in rows {
        let mut dense = vec![Rational::zero(); total_cols];
        for (c, v) in coeffs {
            dense[c] = v;
        }
        let slack = if kind == RowKind::Le {
            dense[next_col] = Rational::one();
            let s = next_col;
            next_col += 1;
            Some(s)
        } else {
            None
        };
        let mut b = b;
        let mut flipped = false;
        if b.is_negative() {
            for v in dense.iter_mut() {
                if !v.is_zero() {
                    *v = -v.clone();
                }
            }
            b = -b;
            flipped = true;
        }
        match slack {
            Some(s) if !flipped => basis.push(s),
            _ => {
                dense[next_col] = Rational::one();
                is_artificial[next_col] = true;
                basis.push(next_col);
                artificial_rows.push(tab.len());
                next_col += 1;
            }
        }
        tab.push(dense);
        rhs.push(b);
    }
    let ncols = next_col;
    for row in tab.iter_mut() {
        row.truncate(ncols);
    }
    let upper = &upper[..ncols];
    let is_artificial = &is_artificial[..ncols];

    // All nonbasic columns start at their lower bound 0, so basic values
    // equal the (nonnegative) right-hand sides.
    let mut status = vec![Status::AtLower; ncols];
    for &b in &basis {
        status[b] = Status::Basic;
    }
    let mut xb: Vec<Rational> = rhs.clone();

    // Phase-1 reduced costs: cost 1 on artificials, 0 elsewhere.
    let mut red: Vec<Rational> = (0..ncols)
        .map(|c| {
            let mut r = if is_artificial[c] {
                Rational::one()
            } else {
                Rational::zero()
            };
            for &i in &artificial_rows {
                r -= &tab[i][c];
            }
            r
        })
        .collect();

    let mut active = vec![true; nrows];
    let mut bland = false;
    let mut degenerate_streak = 0usize;

    loop {
        let objective: Rational = basis
            .iter()
            .zip(xb.iter())
            .filter(|(b, _)| is_artificial[**b])
            .map(|(_, v)| v.clone())
            .sum();
        debug_assert!(!objective.is_negative());
        if objective.is_zero() {
            break;
        }

        // Entering column: improving direction among nonbasic columns.
        let mut entering: Option<(usize, i32)> = None;
        let mut best_score = Rational::zero();
        for c in 0..ncols {
            if status[c] == Status::Basic || is_artificial[c] {
                continue;
            }
            if upper[c].as_ref().is_some_and(|u| u.is_zero()) {
                continue; // fixed column
            }
            let (eligible, dir) = match status[c] {
                Status::AtLower => (red[c].is_negative(), 1),
                Status::AtUpper => (red[c].is_positive(), -1),
                Status::Basic => unreachable!(),
            };
            if !eligible {
                continue;
            }
            if bland {
                entering = Some((c, dir));
                break;
            }
            let score = red[c].abs();
            if entering.is_none() || score > best_score {
                best_score = score;
                entering = Some((c, dir));
            }
        }
        let Some((c, dir)) = entering else {
            return None; // optimum of phase 1 is positive: infeasible
        };

        // Ratio test: the entering column moves by t >= 0 in direction
        // `dir`; basic variables must stay inside [0, upper].
        let mut best_t: Option<Rational> = upper[c].clone();
        let mut leaving: Option<(usize, Status)> = None;
        for i in 0..nrows {
            if !active[i] {
                continue;
            }
            let rate = if dir == 1 {
                tab[i][c].clone()
            } else {
                -tab[i][c].clone()
            };
            if rate.is_positive() {
                let cap = &xb[i] / &rate;
                let better = best_t.as_ref().is_none_or(|t| cap < *t)
                    || (leaving.is_some()
                        && best_t.as_ref() == Some(&cap)
                        && basis[i] < basis[leaving.unwrap().0]);
                if better {
                    best_t = Some(cap);
                    leaving = Some((i, Status::AtLower));
                }
            } else if rate.is_negative() {
                if let Some(u) = &upper[basis[i]] {
                    let cap = (u - &xb[i]) / -rate;
                    let better = best_t.as_ref().is_none_or(|t| cap < *t)
                        || (leaving.is_some()
                            && best_t.as_ref() == Some(&cap)
                            && basis[i] < basis[leaving.unwrap().0]);
                    if better {
                        best_t = Some(cap);
                        leaving = Some((i, Status::AtUpper));
                    }
                }
            }
        }
        let t = best_t.expect("phase-1 objective is bounded below, a cap always exists");
        debug_assert!(!t.is_negative());

        if t.is_zero() {
            degenerate_streak += 1;
            if degenerate_streak > BLAND_TRIGGER {
                bland = true;
            }
        } else {
            degenerate_streak = 0;
            bland = false;
        }

        match leaving {
            None => {
                // Bound flip: the entering column crosses its whole range.
                for i in 0..nrows {
                    if !active[i] || tab[i][c].is_zero() {
                        continue;
                    }
                    let delta = if dir == 1 {
                        &tab[i][c] * &t
                    } else {
                        -(&tab[i][c] * &t)
                    };
                    xb[i] -= delta;
                }
                status[c] = match status[c] {
                    Status::AtLower => Status::AtUpper,
                    Status::AtUpper => Status::AtLower,
                    Status::Basic => unreachable!(),
                };
            }
            Some((p, leave_to)) => {
                // Move the solution, then pivot algebraically.
                let entering_value = match status[c] {
                    Status::AtLower => t.clone(),
                    Status::AtUpper => upper[c].clone().unwrap() - &t,
                    Status::Basic => unreachable!(),
                };
                for i in 0..nrows {
                    if i == p || !active[i] || tab[i][c].is_zero() {
                        continue;
                    }
                    let delta = if dir == 1 {
                        &tab[i][c] * &t
                    } else {
                        -(&tab[i][c] * &t)
                    };
                    xb[i] -= delta;
                }
                let leaving_var = basis[p];
                status[leaving_var] = leave_to;
                status[c] = Status::Basic;
                pivot(&mut tab, &mut rhs, &mut red, &active, p, c);
                basis[p] = c;
                xb[p] = entering_value;
            }
        }
    }

    // Drive leftover artificials out of the basis so the final basis uses
    // structural and slack columns only; rows that cannot be repaired are
    // linearly dependent and get deactivated.
    for p in 0..nrows {
        if !active[p] || !is_artificial[basis[p]] {
            continue;
        }
        debug_assert!(xb[p].is_zero());
        let replacement = (0..ncols)
            .find(|&q| !is_artificial[q] && status[q] != Status::Basic && !tab[p][q].is_zero());
        match replacement {
            Some(q) => {
                let art = basis[p];
                status[art] = Status::AtLower;
                let value = match status[q] {
                    Status::AtUpper => upper[q].clone().unwrap(),
                    _ => Rational::zero(),
                };
                status[q] = Status::Basic;
                pivot(&mut tab, &mut rhs, &mut red, &active, p, q);
                basis[p] = q;
                xb[p] = value;
            }
            None => active[p] = false,
        }
    }

    let mut values = vec![Rational::zero(); structural];
    for (c, value) in values.iter_mut().enumerate() {
        if status[c] == Status::AtUpper {
            *value = upper[c].clone().expect("at-upper needs a finite bound");
        }
    }
    for (i, &b) in basis.iter().enumerate() {
        if active[i] && b < structural {
            values[b] = xb[i].clone();
        }
    }
    Some(values)
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    red: &mut [Rational],
    active: &[bool],
    p: usize,
    q: usize,
) {
    let piv = tab[p][q].clone();
    debug_assert!(!piv.is_zero());
    if piv != Rational::one() {
        for v in tab[p].iter_mut() {
            if !v.is_zero() {
                *v /= &piv;
            }
        }
        rhs[p] /= &piv;
    }
    let pivot_row = tab[p].clone();
    let pivot_rhs = rhs[p].clone();
    for i in 0..tab.len() {
        if i == p || !active[i] {
            continue;
        }
        let factor = tab[i][q].clone();
        if factor.is_zero() {
            continue;
        }
        for (v, pv) in tab[i].iter_mut().zip(pivot_row.iter()) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
        rhs[i] -= &factor * &pivot_rhs;
    }
    let factor = red[q].clone();
    if !factor.is_zero() {
        for (v, pv) in red.iter_mut().zip(pivot_row.iter()) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
}
