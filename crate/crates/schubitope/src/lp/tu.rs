//! Total unimodularity checking for small matrices.
//!
//! The production check uses the Ghouila-Houri criterion on columns: a
//! 0/±1 matrix is totally unimodular exactly when every subset of columns
//! splits into two groups whose per-row sums differ by at most one. That is
//! equivalent to every square minor lying in {0, ±1} and is exponential
//! only in the column count, which the guard keeps small. A literal
//! minor-enumeration cross-check is provided for even smaller fixtures.

use crate::error::Error;

/// Column guard for the Ghouila-Houri scan.
pub const DEFAULT_TU_COLUMNS: usize = 12;

/// Work guard for the brute-force minor enumeration.
const MINOR_WORK_BUDGET: u128 = 50_000_000;

/// True iff every square minor of the matrix lies in {0, 1, -1}, decided by
/// the Ghouila-Houri column criterion. Matrices wider than the guard are
/// refused; this is a test utility, not a production path.
pub fn check_total_unimodularity(matrix: &[Vec<i64>]) -> Result<bool, Error> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::BadSystem("ragged matrix"));
    }
    if cols > DEFAULT_TU_COLUMNS {
        return Err(Error::BudgetExceeded {
            what: "columns for unimodularity check",
            need: cols,
            limit: DEFAULT_TU_COLUMNS,
        });
    }
    // 1x1 minors: every entry must already be 0 or +-1.
    if matrix.iter().flatten().any(|&v| v.abs() > 1) {
        return Ok(false);
    }
    if rows == 0 || cols == 0 {
        return Ok(true);
    }
    for mask in 1u32..(1 << cols) {
        let members: Vec<usize> = (0..cols).filter(|&j| mask >> j & 1 == 1).collect();
        // Rows with at most one nonzero in the subset can never violate the
        // +-1 window, so only the others constrain the signing.
        let relevant: Vec<usize> = (0..rows)
            .filter(|&i| members.iter().filter(|&&j| matrix[i][j] != 0).count() >= 2)
            .collect();
        if !signing_exists(matrix, &members, &relevant, 0, &mut vec![0; relevant.len()]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Depth-first search for a +-1 signing of the chosen columns keeping all
/// partial row sums inside the reachable window.
fn signing_exists(
    matrix: &[Vec<i64>],
    members: &[usize],
    relevant: &[usize],
    depth: usize,
    sums: &mut Vec<i64>,
) -> bool {
    if depth == members.len() {
        return sums.iter().all(|&s| s.abs() <= 1);
    }
    let remaining = (members.len() - depth - 1) as i64;
    let col = members[depth];
    for sign in [1i64, -1] {
        let mut ok = true;
        for (t, &i) in relevant.iter().enumerate() {
            sums[t] += sign * matrix[i][col];
            if sums[t].abs() > 1 + remaining {
                ok = false;
            }
        }
        if ok && signing_exists(matrix, members, relevant, depth + 1, sums) {
            return true;
        }
        for (t, &i) in relevant.iter().enumerate() {
            sums[t] -= sign * matrix[i][col];
        }
    }
    false
}

/// Literal minor enumeration: computes the determinant of every square
/// submatrix. Exponential in both dimensions; guarded by a work budget and
/// used only to cross-check the criterion on tiny fixtures.
pub fn check_tu_by_minors(matrix: &[Vec<i64>]) -> Result<bool, Error> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::BadSystem("ragged matrix"));
    }
    let max_k = rows.min(cols);
    let mut work: u128 = 0;
    for k in 1..=max_k {
        work += binom(rows, k) * binom(cols, k) * (k as u128).pow(3);
    }
    if work > MINOR_WORK_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "minor enumeration work",
            need: work.min(usize::MAX as u128) as usize,
            limit: MINOR_WORK_BUDGET as usize,
        });
    }
    for k in 1..=max_k {
        let mut row_sel = first_combination(k);
        loop {
            let mut col_sel = first_combination(k);
            loop {
                let sub: Vec<Vec<i128>> = row_sel
                    .iter()
                    .map(|&i| col_sel.iter().map(|&j| matrix[i][j] as i128).collect())
                    .collect();
                let det = int_det(sub);
                if det.abs() > 1 {
                    return Ok(false);
                }
                if !next_combination(&mut col_sel, cols) {
                    break;
                }
            }
            if !next_combination(&mut row_sel, rows) {
                break;
            }
        }
    }
    Ok(true)
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

fn next_combination(sel: &mut [usize], n: usize) -> bool {
    let k = sel.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if sel[i] < n - (k - i) {
            sel[i] += 1;
            for j in i + 1..k {
                sel[j] = sel[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Fraction-free integer determinant (Bareiss).
fn int_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let swap = (k + 1..n).find(|&i| a[i][k] != 0);
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
