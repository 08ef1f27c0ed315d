//! Deterministic generators for exhaustive desk-scale sweeps: symmetric
//! groups, compositions, and small diagrams. Shared by the test suites and
//! the CLI self-test.

use crate::perm::{Cell, Diagram, Permutation};

/// All permutations with window inside `1..=n`, in lexicographic order of
/// one-line notation. Values are normalized, so the identity and every
/// shorter-window permutation appear exactly once.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let mut window: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_window(window.clone()).expect("valid window"));
        if !next_permutation(&mut window) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All vectors of `parts` nonnegative integers summing to `total`, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn rec(total: usize, parts: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(current.clone());
            }
            return;
        }
        if parts == 1 {
            current.push(total);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in 0..=total {
            current.push(first);
            rec(total - first, parts - 1, current, out);
            current.pop();
        }
    }
    rec(total, parts, &mut current, &mut out);
    out
}

/// All partitions of `total` (weakly decreasing positive parts).
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// Every diagram inside an `n x n` grid with at most `max_cells` boxes.
/// Exponential in `n^2`; intended for `n <= 4`.
pub fn all_diagrams(n: usize, max_cells: usize) -> Vec<Diagram> {
    assert!(n * n <= 20, "exhaustive diagram sweep limited to tiny grids");
    let positions: Vec<Cell> = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| Cell::new(r, c)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << positions.len()) {
        if (mask.count_ones() as usize) > max_cells {
            continue;
        }
        let cells = positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c);
        out.push(Diagram::from_cells(n, cells).expect("in-grid cells"));
    }
    out
}
