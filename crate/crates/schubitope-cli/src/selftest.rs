//! Built-in verification sweeps, mirroring the acceptance suite at a
//! selectable scope. `quick` keeps every sweep at S4 scale and finishes in
//! seconds; `full` runs the S5/S6 suites.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use schubitope::lp::{
    build_compression_rothe, build_p, build_p_inequality_form, build_q, check_total_unimodularity,
    check_tu_by_minors, integral_vertex, lp_feasible,
};
use schubitope::perm::{grassmannian_for, Cell, Diagram, Permutation};
use schubitope::schubert::{
    all_schubert_polys, coefficient_oracle, count_coefficient_transition, kostka, nonvanishing,
    transition_children,
};
use schubitope::sweep::{all_diagrams, compositions, partitions, symmetric_group};
use schubitope::tableau::{enumerate_column_strict, enumerate_perfect};
use schubitope::word::{greedy_tableau, theta, Subset};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Quick,
    Full,
}

#[derive(Serialize)]
struct SuiteReport {
    name: String,
    passed: bool,
    elapsed_ms: u128,
    details: String,
}

#[derive(Serialize)]
struct Summary {
    scope: String,
    seed: u64,
    passed: bool,
    suites: Vec<SuiteReport>,
}

struct Ctx {
    degree: usize,
    rng: ChaCha20Rng,
}

type Suite = fn(&mut Ctx) -> Result<String, String>;

pub fn run(scope: Scope, seed: u64, json: bool) -> ExitCode {
    let degree = match scope {
        Scope::Quick => 4,
        Scope::Full => 5,
    };
    let suites: Vec<(&str, Suite)> = vec![
        ("golden-facts", suite_golden),
        ("oracle-equivalence", suite_oracle_equivalence),
        ("relaxation-equivalence", suite_relaxation),
        ("compression-equivalence", suite_compression),
        ("vertex-integrality", suite_vertices),
        ("transition-identity", suite_transition_identity),
        ("counting", suite_counting),
        ("pattern-bounds", suite_pattern_bounds),
        ("greedy-theta", suite_greedy_theta),
        ("unimodularity", suite_unimodularity),
    ];
    let mut reports = Vec::new();
    let mut all_passed = true;
    for (name, suite) in suites {
        let mut ctx = Ctx {
            degree,
            rng: ChaCha20Rng::seed_from_u64(seed),
        };
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| suite(&mut ctx)));
        let elapsed = start.elapsed();
        let (passed, details) = match outcome {
            Ok(Ok(details)) => (true, details),
            Ok(Err(details)) => (false, details),
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panicked".into());
                (false, msg)
            }
        };
        all_passed &= passed;
        if !json {
            println!(
                "{:<24} {}  ({:?}) {}",
                name,
                if passed { "PASS" } else { "FAIL" },
                elapsed,
                details
            );
        }
        reports.push(SuiteReport {
            name: name.into(),
            passed,
            elapsed_ms: elapsed.as_millis(),
            details,
        });
    }
    if json {
        let summary = Summary {
            scope: match scope {
                Scope::Quick => "quick".into(),
                Scope::Full => "full".into(),
            },
            seed,
            passed: all_passed,
            suites: reports,
        };
        println!("{}", serde_json::to_string(&summary).expect("serializable"));
    } else if all_passed {
        println!("selftest: all suites passed");
    } else {
        println!("selftest: FAILURES detected");
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn check(cond: bool, message: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message.to_string())
    }
}

fn sweep(degree: usize) -> Vec<(Permutation, Vec<Vec<usize>>)> {
    symmetric_group(degree)
        .into_iter()
        .map(|w| {
            let code = w.code();
            let alphas = if code.is_empty() {
                vec![vec![]]
            } else {
                compositions(code.weight(), code.len())
            };
            (w, alphas)
        })
        .collect()
}

fn pad(alpha: &[usize], n: usize) -> Vec<usize> {
    (0..n).map(|i| alpha.get(i).copied().unwrap_or(0)).collect()
}

fn suite_golden(_ctx: &mut Ctx) -> Result<String, String> {
    let w = Permutation::from_window(vec![5, 3, 8, 4, 1, 2, 6, 7]).map_err(|e| e.to_string())?;
    let code = w.code();
    check(code.entries() == [4, 2, 5, 2], "code of 53841267")?;
    check(
        code.accessible_box() == Some(Cell::new(3, 7)),
        "accessible box",
    )?;
    let d = w.rothe();
    let ess: BTreeSet<Cell> = d.essential_set();
    let expect: BTreeSet<Cell> = [(1, 4), (3, 4), (3, 7), (4, 2)]
        .iter()
        .map(|&(r, c)| Cell::new(r, c))
        .collect();
    check(ess == expect, "essential set")?;
    check(
        d.dominant_component().partition_shape() == Some(vec![4, 2, 2, 2]),
        "dominant shape",
    )?;
    let vex = schubitope::perm::Code::new(vec![5, 1, 3, 1, 2]);
    let (shape, flag) = vex.shape_and_flag().map_err(|e| e.to_string())?;
    check(shape == [5, 3, 2, 1, 1] && flag == [1, 3, 5, 5, 5], "shape/flag")?;
    let root = schubitope::perm::Code::new(vec![4, 2, 5, 3]);
    check(
        count_coefficient_transition(&root, &[4, 2, 5, 3]).map_err(|e| e.to_string())? == 1,
        "worked coefficient",
    )?;
    let c31524 = schubitope::perm::Code::new(vec![2, 0, 2]);
    check(nonvanishing(&c31524, &[2, 1, 1]), "positive instance")?;
    check(!nonvanishing(&c31524, &[4]), "zero instance")?;
    Ok("worked examples".into())
}

fn suite_oracle_equivalence(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree;
    let polys = all_schubert_polys(n).map_err(|e| e.to_string())?;
    let mut instances = 0usize;
    for (w, alphas) in sweep(n) {
        let code = w.code();
        let d = w.rothe_diagram(n).map_err(|e| e.to_string())?;
        for alpha in alphas {
            instances += 1;
            let padded = pad(&alpha, n);
            let decided = nonvanishing(&code, &alpha);
            let coefficient = polys[&w].coefficient(&padded);
            let perfect = enumerate_perfect(&d, &padded).map_err(|e| e.to_string())?;
            let strict = enumerate_column_strict(&d, &padded).map_err(|e| e.to_string())?;
            check(
                decided == (coefficient > 0)
                    && decided == !perfect.is_empty()
                    && decided == !strict.is_empty(),
                &format!("disagreement at w = {w}, alpha = {alpha:?}"),
            )?;
        }
    }
    Ok(format!("{instances} instances on S{n}"))
}

fn suite_relaxation(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree;
    let mut instances = 0usize;
    for (w, alphas) in sweep(n) {
        let d = w.rothe_diagram(n).map_err(|e| e.to_string())?;
        for alpha in alphas {
            instances += 1;
            let padded = pad(&alpha, n);
            let sys = build_p(&d, &padded).map_err(|e| e.to_string())?;
            let relaxed = lp_feasible(&sys).is_some();
            let integral = !enumerate_perfect(&d, &padded)
                .map_err(|e| e.to_string())?
                .is_empty();
            check(
                relaxed == integral,
                &format!("relaxation mismatch at w = {w}, alpha = {alpha:?}"),
            )?;
        }
    }
    Ok(format!("{instances} instances on S{n}"))
}

fn suite_compression(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree;
    let mut instances = 0usize;
    for (w, alphas) in sweep(n) {
        let code = w.code();
        let compression = build_compression_rothe(&code);
        let dw = w.rothe();
        let d = w.rothe_diagram(n).map_err(|e| e.to_string())?;
        for alpha in alphas {
            instances += 1;
            let padded = pad(&alpha, n);
            let p = lp_feasible(&build_p(&d, &padded).map_err(|e| e.to_string())?).is_some();
            let q_sys = build_q(&dw, &compression, &pad(&alpha, compression.m))
                .map_err(|e| e.to_string())?;
            let q = lp_feasible(&q_sys).is_some();
            check(
                p == q,
                &format!("compression mismatch at w = {w}, alpha = {alpha:?}"),
            )?;
        }
    }
    Ok(format!("{instances} instances on S{n}"))
}

fn suite_vertices(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree;
    let mut feasible = 0usize;
    for (w, alphas) in sweep(n) {
        let d = w.rothe_diagram(n).map_err(|e| e.to_string())?;
        for alpha in alphas {
            let padded = pad(&alpha, n);
            let sys = build_p(&d, &padded).map_err(|e| e.to_string())?;
            match integral_vertex(&sys) {
                Ok(Some(v)) => {
                    feasible += 1;
                    for j in 1..=n {
                        let sum: usize = (1..=n).map(|i| v.get(i, j) as usize).sum();
                        check(
                            sum == d.column_rows(j).len(),
                            &format!("column sums off at w = {w}"),
                        )?;
                    }
                }
                Ok(None) => {}
                Err(e) => return Err(format!("vertex extraction failed at w = {w}: {e}")),
            }
        }
    }
    Ok(format!("{feasible} integral vertices on S{n}"))
}

fn suite_transition_identity(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree;
    let polys = all_schubert_polys(n).map_err(|e| e.to_string())?;
    let mut checked = 0usize;
    for w in symmetric_group(n) {
        let code = w.code();
        if code.is_vexillary() {
            continue;
        }
        checked += 1;
        let step = transition_children(&code).map_err(|e| e.to_string())?;
        let mut weight = vec![0usize; step.row];
        weight[step.row - 1] = 1;
        let mut rhs = polys[&step.deletion.to_permutation()].mul_monomial(&weight);
        for (_, child) in &step.marches {
            rhs = rhs.add(&polys[&child.to_permutation()]);
        }
        check(polys[&w] == rhs, &format!("identity fails at w = {w}"))?;
    }
    Ok(format!("{checked} non-vexillary permutations on S{n}"))
}

fn suite_counting(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree;
    let polys = all_schubert_polys(n).map_err(|e| e.to_string())?;
    let mut instances = 0usize;
    for (w, alphas) in sweep(n) {
        let code = w.code();
        for alpha in alphas {
            instances += 1;
            let counted = count_coefficient_transition(&code, &alpha).map_err(|e| e.to_string())?;
            check(
                counted == polys[&w].coefficient(&alpha),
                &format!("count mismatch at w = {w}, alpha = {alpha:?}"),
            )?;
        }
    }
    let max_weight = if ctx.degree >= 5 { 6 } else { 5 };
    let mut kostka_instances = 0usize;
    for weight in 0..=max_weight {
        for shape in partitions(weight) {
            let w = grassmannian_for(&shape);
            let code = w.code();
            let alphas = if code.is_empty() {
                vec![vec![]]
            } else {
                compositions(weight, code.len())
            };
            for alpha in alphas {
                kostka_instances += 1;
                let counted =
                    count_coefficient_transition(&code, &alpha).map_err(|e| e.to_string())?;
                let k = kostka(&shape, &alpha).map_err(|e| e.to_string())?;
                check(
                    counted == k,
                    &format!("Kostka mismatch at {shape:?}, {alpha:?}"),
                )?;
                if w.window_len() <= 8 {
                    let o = coefficient_oracle(&w, &alpha).map_err(|e| e.to_string())?;
                    check(counted == o, &format!("oracle mismatch at {shape:?}"))?;
                }
            }
        }
    }
    Ok(format!(
        "{instances} S{n} instances, {kostka_instances} Kostka instances"
    ))
}

fn suite_pattern_bounds(ctx: &mut Ctx) -> Result<String, String> {
    let n = ctx.degree + 1; // S5 quick, S6 full
    let polys = all_schubert_polys(n).map_err(|e| e.to_string())?;
    for w in symmetric_group(n) {
        let bound = w.count_132() as i64 + 1;
        let poly = &polys[&w];
        check(
            poly.support().count() as i64 >= bound && poly.eval_ones() >= bound,
            &format!("pattern bound fails at w = {w}"),
        )?;
    }
    Ok(format!("S{n} support and specialization bounds"))
}

fn suite_greedy_theta(ctx: &mut Ctx) -> Result<String, String> {
    let (samples, exhaustive_cells) = match ctx.degree {
        4 => (200usize, 4usize),
        _ => (1000, 6),
    };
    let mut done = 0usize;
    for d in all_diagrams(3, exhaustive_cells) {
        greedy_properties(&d)?;
        done += 1;
    }
    let mut random = 0usize;
    while random < samples {
        let n = ctx.rng.gen_range(1..=5usize);
        let density: u32 = ctx.rng.gen_range(20..80);
        let cells: Vec<Cell> = (1..=n)
            .flat_map(|r| (1..=n).map(move |c| Cell::new(r, c)))
            .filter(|_| ctx.rng.gen_range(0..100u32) < density)
            .collect();
        if cells.len() > 10 {
            continue;
        }
        let d = Diagram::from_cells(n, cells).map_err(|e| e.to_string())?;
        greedy_properties(&d)?;
        random += 1;
    }
    Ok(format!("{done} exhaustive + {random} random diagrams"))
}

fn greedy_properties(d: &Diagram) -> Result<(), String> {
    let n = d.grid_size();
    for s in Subset::all(n) {
        let pi = greedy_tableau(d, s);
        check(
            theta(d, s) == pi.preimage_count(s),
            "theta != greedy preimage",
        )?;
        check(
            pi.is_flagged() && pi.is_column_injective(),
            "greedy tableau not flagged column-injective",
        )?;
        for cell in d.cells() {
            let member = pi.label(cell).is_some_and(|v| s.contains(v));
            let before = (1..cell.row)
                .filter(|&i| pi.label(Cell::new(i, cell.col)).is_some_and(|v| s.contains(v)))
                .count();
            let room = s.iter().filter(|&i| i <= cell.row).count();
            check(member == (before < room), "box characterization")?;
        }
    }
    // Monotonicity along one nested chain per diagram.
    let full = Subset::full(n);
    let mut previous: BTreeSet<Cell> = BTreeSet::new();
    for k in 0..=n {
        let s = Subset::from_members(1..=k);
        let current: BTreeSet<Cell> = greedy_tableau(d, s)
            .labels()
            .filter(|(_, l)| l.is_some_and(|v| s.contains(v)))
            .map(|(c, _)| c)
            .collect();
        check(previous.is_subset(&current), "monotonicity")?;
        previous = current;
    }
    let _ = full;
    Ok(())
}

fn suite_unimodularity(ctx: &mut Ctx) -> Result<String, String> {
    let max_n = if ctx.degree >= 5 { 3 } else { 2 };
    for n in 1..=max_n {
        let sys = build_p_inequality_form(&Diagram::empty(n), &vec![0; n])
            .map_err(|e| e.to_string())?;
        let m = sys.integer_matrix().ok_or("non-integer matrix")?;
        check(
            check_total_unimodularity(&m).map_err(|e| e.to_string())?,
            &format!("matrix for n = {n} not totally unimodular"),
        )?;
    }
    let d2 = Diagram::from_cells(2, [Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 2)])
        .map_err(|e| e.to_string())?;
    let sys2 = build_p_inequality_form(&d2, &[2, 1]).map_err(|e| e.to_string())?;
    let m2 = sys2.integer_matrix().ok_or("non-integer matrix")?;
    check(
        check_tu_by_minors(&m2).map_err(|e| e.to_string())?,
        "minor enumeration rejected the displayed instance",
    )?;
    Ok(format!("inequality matrices up to n = {max_n}"))
}
