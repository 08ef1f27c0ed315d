//! Rounding a fractional point of the full tableau polytope to a lattice
//! point, without invoking total unimodularity.
//!
//! The routine repeatedly finds a cycle of fractional coordinates whose
//! rows and columns alternate (a stable sequence), perturbs along the
//! induced direction, and pushes by the largest step that stays inside the
//! polytope. Content rows are immune to the perturbation by construction;
//! the binding constraint at the maximal step is always a box bound of a
//! touched coordinate, so every round makes at least one more coordinate
//! integral. This is the optional cross-validation route; the default path
//! extracts an integral vertex directly from the simplex basis.

use num::{One, Signed, Zero};

use super::{build_p, LatticePoint, Rational};
use crate::error::Error;
use crate::perm::Diagram;

/// Rounds a (possibly fractional) member of the full polytope to one of its
/// lattice points by stable-cycle perturbation.
pub fn round_to_lattice(
    d: &Diagram,
    alpha: &[usize],
    point: &[Rational],
) -> Result<LatticePoint, Error> {
    let n = d.grid_size();
    let sys = build_p(d, alpha)?;
    if !sys.satisfied_by(point) {
        return Err(Error::InfeasiblePoint("rounding requires a polytope member"));
    }
    // Matrix view a[i][j], 0-indexed from the column-major flat point.
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| point[j * n + i].clone()).collect())
        .collect();

    let mut rounds = 0usize;
    while let Some(start) = first_fractional(&a) {
        rounds += 1;
        assert!(rounds <= n * n + 1, "rounding failed to make progress");

        let (rows, cols) = stable_cycle(&a, start);
        let m = cols.len();
        // Perturbation direction: +1 where the cycle enters a coordinate as
        // (r_k, c_k), -1 where it leaves as (r_{k+1}, c_k).
        let mut dir = vec![vec![0i64; n]; n];
        for k in 0..m {
            dir[rows[k] - 1][cols[k] - 1] += 1;
            dir[rows[k + 1] - 1][cols[k] - 1] -= 1;
        }
        assert!(
            dir.iter().flatten().any(|&v| v != 0),
            "stable cycle induced the zero direction"
        );
        // Content rows are preserved for every step size because each row
        // index appears as often entering as leaving.
        debug_assert!((0..n).all(|i| dir[i].iter().sum::<i64>() == 0));

        // Largest admissible step: box bounds of touched coordinates plus
        // the flag rows whose prefix sums decrease.
        let mut step: Option<Rational> = None;
        let mut tighten = |cand: Rational| {
            if step.as_ref().is_none_or(|s| cand < *s) {
                step = Some(cand);
            }
        };
        for i in 0..n {
            for j in 0..n {
                if dir[i][j] > 0 {
                    tighten((Rational::one() - &a[i][j]) / Rational::from_integer(dir[i][j].into()));
                } else if dir[i][j] < 0 {
                    tighten(&a[i][j] / Rational::from_integer((-dir[i][j]).into()));
                }
            }
        }
        for j in 1..=n {
            let rows_in_col = d.column_rows(j);
            let mut rate = 0i64;
            let mut prefix = Rational::zero();
            for s in 1..=n {
                rate += dir[s - 1][j - 1];
                prefix += &a[s - 1][j - 1];
                if rate < 0 {
                    let cnt = rows_in_col.iter().filter(|&&r| r <= s).count();
                    let slack = &prefix - Rational::from_integer((cnt as i64).into());
                    debug_assert!(!slack.is_negative());
                    tighten(slack / Rational::from_integer((-rate).into()));
                }
            }
        }
        let step = step.expect("a touched coordinate always bounds the step");
        assert!(step.is_positive(), "stable cycle admits no positive step");
        let integral_before = count_integral(&a);
        for i in 0..n {
            for j in 0..n {
                if dir[i][j] != 0 {
                    a[i][j] += &step * Rational::from_integer(dir[i][j].into());
                }
            }
        }
        assert!(
            count_integral(&a) > integral_before,
            "maximal step left every touched coordinate fractional"
        );
    }

    let mut entries = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let v = &a[i][j];
            if !v.is_integer() {
                return Err(Error::NonIntegralPoint(i + 1, j + 1));
            }
            entries[j * n + i] = if v.is_zero() { 0 } else { 1 };
        }
    }
    let rounded = LatticePoint { n, entries };
    let flat: Vec<Rational> = rounded
        .flat()
        .iter()
        .map(|&v| Rational::from_integer((v as i64).into()))
        .collect();
    debug_assert!(sys.satisfied_by(&flat));
    Ok(rounded)
}

fn first_fractional(a: &[Vec<Rational>]) -> Option<(usize, usize)> {
    let n = a.len();
    for j in 1..=n {
        for i in 1..=n {
            if !a[i - 1][j - 1].is_integer() {
                return Some((i, j));
            }
        }
    }
    None
}

fn count_integral(a: &[Vec<Rational>]) -> usize {
    a.iter().flatten().filter(|v| v.is_integer()).count()
}

/// Builds the stable sequence: from a fractional seed, hop to the lowest
/// other fractional entry in the current column, then to a fractional entry
/// in that row, until a row repeats; return the trimmed cycle
/// `(r_1,...,r_{m+1}; c_1,...,c_m)` with `r_{m+1} = r_1`.
fn stable_cycle(a: &[Vec<Rational>], start: (usize, usize)) -> (Vec<usize>, Vec<usize>) {
    let n = a.len();
    let mut rows = vec![start.0];
    let mut cols = vec![start.1];
    loop {
        let r = *rows.last().unwrap();
        let c = *cols.last().unwrap();
        // Column sums are integral, so a second fractional entry exists.
        let next_row = (1..=n)
            .rev()
            .find(|&i| i != r && !a[i - 1][c - 1].is_integer())
            .expect("column with a single fractional entry");
        if let Some(pos) = rows.iter().position(|&x| x == next_row) {
            rows.push(next_row);
            let trimmed_rows = rows[pos..].to_vec();
            let trimmed_cols = cols[pos..].to_vec();
            return (trimmed_rows, trimmed_cols);
        }
        rows.push(next_row);
        // Row sums are integral, so the row has another fractional entry.
        let next_col = (1..=n)
            .find(|&j| j != c && !a[next_row - 1][j - 1].is_integer())
            .expect("row with a single fractional entry");
        cols.push(next_col);
    }
}

#[cfg(test)]
mod tests {
    use super::super::{lp_feasible, rat_int};
    use super::*;
    use crate::perm::{Cell, Permutation};
    use crate::tableau::tableau_from_integral_point;

    #[test]
    fn integral_input_passes_through() {
        let d = Diagram::from_cells(2, [Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 2)])
            .unwrap();
        let point = vec![rat_int(1), rat_int(0), rat_int(1), rat_int(1)];
        let lattice = round_to_lattice(&d, &[2, 1], &point).unwrap();
        assert_eq!(lattice.flat(), &[1, 0, 1, 1]);
    }

    #[test]
    fn rejects_outsiders() {
        let d = Diagram::from_cells(2, [Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 2)])
            .unwrap();
        let point = vec![rat_int(0), rat_int(1), rat_int(1), rat_int(1)];
        assert!(round_to_lattice(&d, &[2, 1], &point).is_err());
    }

    #[test]
    fn rounds_a_genuinely_fractional_member() {
        // D(31524) with content (2,1,1): mix the two perfect fillings of
        // that content to get a fractional member, then round it back.
        let w = Permutation::from_window(vec![3, 1, 5, 2, 4]).unwrap();
        let d = w.rothe();
        let alpha = [2, 1, 1, 0, 0];
        let t1 = LatticePoint::from_rows(
            5,
            vec![
                vec![1, 1, 0, 0, 0], // value 1 in columns 1, 2
                vec![0, 0, 0, 1, 0], // value 2 in column 4
                vec![0, 1, 0, 0, 0], // value 3 in column 2
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
            ],
        );
        let t2 = LatticePoint::from_rows(
            5,
            vec![
                vec![1, 1, 0, 0, 0],
                vec![0, 1, 0, 0, 0], // value 2 in column 2
                vec![0, 0, 0, 1, 0], // value 3 in column 4
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0],
            ],
        );
        let half = Rational::new(1.into(), 2.into());
        let mix: Vec<Rational> = t1
            .flat()
            .iter()
            .zip(t2.flat().iter())
            .map(|(&x, &y)| &half * rat_int(x as i64) + &half * rat_int(y as i64))
            .collect();
        let rounded = round_to_lattice(&d, &alpha, &mix).unwrap();
        let tab = tableau_from_integral_point(&d, &rounded).unwrap();
        assert!(tab.is_perfect());
        assert_eq!(tab.content(5), alpha);
    }

    #[test]
    fn agrees_with_vertex_route_on_solver_output() {
        let w = Permutation::from_window(vec![3, 1, 5, 2, 4]).unwrap();
        let d = w.rothe();
        let alpha = [2, 1, 1, 0, 0];
        let sys = build_p(&d, &alpha).unwrap();
        let point = lp_feasible(&sys).unwrap();
        let rounded = round_to_lattice(&d, &alpha, &point).unwrap();
        let tab = tableau_from_integral_point(&d, &rounded).unwrap();
        assert!(tab.is_perfect() && tab.is_column_strict());
        assert_eq!(tab.content(5), alpha);
    }
}
