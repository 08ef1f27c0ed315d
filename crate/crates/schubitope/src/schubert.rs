//! Schubert polynomials and their coefficients.
//!
//! Three layers live here. The divided-difference oracle expands an actual
//! polynomial by the defining recursion; it is exponential and guarded, and
//! exists so everything else can be checked against it. The nonvanishing
//! decision runs the production pipeline: boundary checks, then the Rothe
//! column compression, then exact LP feasibility of the compressed system;
//! no polynomial and no tableau set is ever expanded there. Counting walks
//! the transition tree down to vexillary leaves, whose polynomials are
//! flagged Schur functions, and adds up flagged-tableau contents.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;
use crate::lp::{self, LatticePoint};
use crate::perm::{pivots, Cell, Code, Permutation};
use crate::poly::MultiPoly;
use crate::tableau::{
    self, decode_row_count_matrix, enumerate_flagged_ssyt, validate_row_count_matrix, Tableau,
};

/// Guard on the symmetric group degree for the polynomial oracle.
pub const DEFAULT_ORACLE_DEGREE: usize = 8;
/// Guard on transition-tree size.
pub const DEFAULT_TREE_NODES: usize = 1_000_000;

static ORACLE_CALLS: AtomicU64 = AtomicU64::new(0);

/// How many times the divided-difference oracle has run in this process.
/// The decision pipeline must never bump this; the complexity smoke test
/// asserts exactly that.
pub fn oracle_invocations() -> u64 {
    ORACLE_CALLS.load(Ordering::Relaxed)
}

fn staircase(n: usize) -> MultiPoly {
    let exps: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
    MultiPoly::monomial(n, &exps, 1)
}

/// The Schubert polynomial of `w` inside `S_n`, by divided differences down
/// from the staircase monomial of the longest element. Exponential-size
/// output; guarded.
pub fn schubert_divided_diff(w: &Permutation, n: usize) -> Result<MultiPoly, Error> {
    schubert_divided_diff_with_limit(w, n, DEFAULT_ORACLE_DEGREE)
}

pub fn schubert_divided_diff_with_limit(
    w: &Permutation,
    n: usize,
    limit: usize,
) -> Result<MultiPoly, Error> {
    if n > limit {
        return Err(Error::BudgetExceeded {
            what: "symmetric group degree for the polynomial oracle",
            need: n,
            limit,
        });
    }
    if w.window_len() > n {
        return Err(Error::GridTooSmall {
            given: n,
            needed: w.window_len(),
        });
    }
    ORACLE_CALLS.fetch_add(1, Ordering::Relaxed);
    let mut current: Vec<usize> = (1..=n).map(|i| w.apply(i)).collect();
    // Multiply back up to w_0 recording the ascent positions used.
    let mut ascents = Vec::new();
    while let Some(i) = (0..n - 1).find(|&i| current[i] < current[i + 1]) {
        ascents.push(i + 1);
        current.swap(i, i + 1);
    }
    let mut poly = staircase(n);
    for &i in ascents.iter().rev() {
        poly = poly.divided_difference(i);
    }
    Ok(poly)
}

/// All Schubert polynomials of `S_n` at once, each one divided difference
/// away from its parent. Keys are normalized permutations.
pub fn all_schubert_polys(n: usize) -> Result<HashMap<Permutation, MultiPoly>, Error> {
    if n > DEFAULT_ORACLE_DEGREE {
        return Err(Error::BudgetExceeded {
            what: "symmetric group degree for the polynomial oracle",
            need: n,
            limit: DEFAULT_ORACLE_DEGREE,
        });
    }
    ORACLE_CALLS.fetch_add(1, Ordering::Relaxed);
    let mut map: HashMap<Permutation, MultiPoly> = HashMap::new();
    let w0 = Permutation::from_window((1..=n).rev().collect()).expect("w0 window");
    map.insert(w0.clone(), staircase(n));
    let mut order: Vec<Permutation> = crate::sweep::symmetric_group(n);
    order.sort_by_key(|w| std::cmp::Reverse(w.inversions()));
    for w in order {
        if map.contains_key(&w) {
            continue;
        }
        let i = (1..n)
            .find(|&i| w.apply(i) < w.apply(i + 1))
            .expect("only w0 has no ascent");
        let parent = w.swap_positions(i);
        let parent_poly = map
            .get(&parent)
            .expect("parents have strictly more inversions");
        let poly = parent_poly.divided_difference(i);
        map.insert(w, poly);
    }
    Ok(map)
}

/// `[x^alpha] S_w`, straight from the expanded polynomial.
pub fn coefficient_oracle(w: &Permutation, alpha: &[usize]) -> Result<i64, Error> {
    coefficient_oracle_with_limit(w, alpha, DEFAULT_ORACLE_DEGREE)
}

pub fn coefficient_oracle_with_limit(
    w: &Permutation,
    alpha: &[usize],
    limit: usize,
) -> Result<i64, Error> {
    let n = w.window_len().max(1);
    let poly = schubert_divided_diff_with_limit(w, n, limit)?;
    Ok(poly.coefficient(alpha))
}

/// Sum of all coefficients of `S_w` (the principal specialization at 1).
pub fn principal_specialization(w: &Permutation) -> Result<i64, Error> {
    let n = w.window_len().max(1);
    Ok(schubert_divided_diff(w, n)?.eval_ones())
}

/// The headline decision: is `c_{alpha,w} > 0`? Boundary checks, then the
/// Rothe compression, then exact feasibility of the compressed system.
/// Never expands a polynomial or enumerates a tableau.
pub fn nonvanishing(code: &Code, alpha: &[usize]) -> bool {
    let l = code.len();
    if alpha.iter().skip(l).any(|&a| a > 0) {
        return false;
    }
    if alpha.iter().sum::<usize>() != code.weight() {
        return false;
    }
    let alpha_tilde: Vec<usize> = (0..l).map(|i| alpha.get(i).copied().unwrap_or(0)).collect();
    let compression = lp::build_compression_rothe(code);
    let w = code.to_permutation();
    let row_sets: Vec<Vec<usize>> = compression
        .reps
        .iter()
        .map(|&p| w.rothe_column_rows(p))
        .collect();
    let sys = lp::build_q_from_row_data(compression.m, &compression.sizes, &row_sets, &alpha_tilde)
        .expect("Rothe compression data is well-formed");
    lp::lp_feasible(&sys).is_some()
}

/// A column-strict flagged filling of the Rothe diagram with content
/// `alpha`, when the coefficient is nonzero: decided by the compressed
/// system, then extracted from an integral vertex of the full one.
pub fn tableau_witness(code: &Code, alpha: &[usize]) -> Result<Option<Tableau>, Error> {
    if !nonvanishing(code, alpha) {
        return Ok(None);
    }
    let w = code.to_permutation();
    let d = w.rothe();
    let n = d.grid_size();
    let padded: Vec<usize> = (0..n).map(|i| alpha.get(i).copied().unwrap_or(0)).collect();
    let sys = lp::build_p(&d, &padded)?;
    let vertex = lp::integral_vertex(&sys)?
        .expect("the compressed and full systems decide the same set");
    let tableau = tableau::tableau_from_integral_point(&d, &vertex)?;
    debug_assert!(tableau.is_perfect() && tableau.is_column_strict());
    Ok(Some(tableau))
}

/// The integral vertex behind [`tableau_witness`], exposed for callers that
/// want the raw 0/1 point.
pub fn witness_point(code: &Code, alpha: &[usize]) -> Result<Option<LatticePoint>, Error> {
    if !nonvanishing(code, alpha) {
        return Ok(None);
    }
    let w = code.to_permutation();
    let d = w.rothe();
    let n = d.grid_size();
    let padded: Vec<usize> = (0..n).map(|i| alpha.get(i).copied().unwrap_or(0)).collect();
    let sys = lp::build_p(&d, &padded)?;
    lp::integral_vertex(&sys)
}

/// The two move types of the transition tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    /// Deletion of the accessible box in the given row; weight `x_row`.
    Deletion(usize),
    /// March move for the pivot in the given row; weight 1.
    March(usize),
}

/// The children of a non-vexillary node.
#[derive(Debug, Clone)]
pub struct TransitionChildren {
    /// Row of the accessible box.
    pub row: usize,
    pub deletion: Code,
    /// `(pivot row, child code)`, ascending in pivot row.
    pub marches: Vec<(usize, Code)>,
}

/// One transition step: the deletion child (weighted by `x_r`) and one
/// march child per pivot, all computed on codes.
pub fn transition_children(code: &Code) -> Result<TransitionChildren, Error> {
    if code.is_vexillary() {
        return Err(Error::VexillaryLeaf);
    }
    let z = code
        .accessible_box()
        .expect("non-vexillary permutations are non-dominant");
    let r = z.row;
    let entries = code.entries();
    let mut deletion_entries = entries.to_vec();
    deletion_entries[r - 1] -= 1;
    let deletion = Code::new(deletion_entries);

    let w = code.to_permutation();
    let piv = pivots(&w, z).expect("accessible box of its own permutation");
    let mut marches = Vec::new();
    for Cell { row: i, .. } in piv {
        let wi = w.apply(i);
        let dots_below = (1..r).filter(|&h| w.apply(h) < wi).count();
        let b = entries[r - 1] - ((wi - 1) - dots_below);
        debug_assert!(b >= 1, "march move must carry at least one box");
        let mut child = entries.to_vec();
        child[i - 1] += b;
        child[r - 1] -= b;
        marches.push((i, Code::new(child)));
    }
    Ok(TransitionChildren {
        row: r,
        deletion,
        marches,
    })
}

/// A node of the rendered transition tree.
#[derive(Debug, Clone)]
pub struct TransitionNode {
    pub code: Code,
    pub children: Vec<(EdgeLabel, TransitionNode)>,
}

impl TransitionNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(|(_, c)| c.leaf_count()).sum()
        }
    }
}

/// Expands the whole transition tree. Deletion child first, then march
/// children by ascending pivot row.
pub fn transition_tree(code: &Code) -> Result<TransitionNode, Error> {
    transition_tree_with_budget(code, DEFAULT_TREE_NODES)
}

pub fn transition_tree_with_budget(code: &Code, budget: usize) -> Result<TransitionNode, Error> {
    let mut budget = budget;
    build_tree(code, &mut budget)
}

fn build_tree(code: &Code, budget: &mut usize) -> Result<TransitionNode, Error> {
    if *budget == 0 {
        return Err(Error::BudgetExceeded {
            what: "transition tree nodes",
            need: DEFAULT_TREE_NODES + 1,
            limit: DEFAULT_TREE_NODES,
        });
    }
    *budget -= 1;
    if code.is_vexillary() {
        return Ok(TransitionNode {
            code: code.clone(),
            children: Vec::new(),
        });
    }
    let step = transition_children(code)?;
    let mut children = Vec::new();
    children.push((
        EdgeLabel::Deletion(step.row),
        build_tree(&step.deletion, budget)?,
    ));
    for (i, child) in &step.marches {
        children.push((EdgeLabel::March(*i), build_tree(child, budget)?));
    }
    Ok(TransitionNode {
        code: code.clone(),
        children,
    })
}

/// The full leaf expansion: pairs `(deletion weight, vexillary leaf code)`
/// in depth-first order, multiplicities preserved. The weight vector has
/// the length of the input code.
pub fn transition_expand(code: &Code) -> Result<Vec<(Vec<usize>, Code)>, Error> {
    transition_expand_with_budget(code, DEFAULT_TREE_NODES)
}

pub fn transition_expand_with_budget(
    code: &Code,
    budget: usize,
) -> Result<Vec<(Vec<usize>, Code)>, Error> {
    let tree = transition_tree_with_budget(code, budget)?;
    let mut out = Vec::new();
    let mut weight = vec![0usize; code.len()];
    collect_leaves(&tree, &mut weight, &mut out);
    Ok(out)
}

fn collect_leaves(node: &TransitionNode, weight: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Code)>) {
    if node.is_leaf() {
        out.push((weight.clone(), node.code.clone()));
        return;
    }
    for (label, child) in &node.children {
        match label {
            EdgeLabel::Deletion(r) => {
                weight[r - 1] += 1;
                collect_leaves(child, weight, out);
                weight[r - 1] -= 1;
            }
            EdgeLabel::March(_) => collect_leaves(child, weight, out),
        }
    }
}

fn homogeneous(nvars: usize, degree: usize, vars: usize) -> MultiPoly {
    // h_degree(x_1..x_vars) inside nvars variables.
    if degree == 0 {
        return MultiPoly::one(nvars);
    }
    if vars == 0 {
        return MultiPoly::zero(nvars);
    }
    let mut result = MultiPoly::zero(nvars);
    let mut exps = vec![0usize; vars];
    fn rec(
        exps: &mut Vec<usize>,
        idx: usize,
        remaining: usize,
        nvars: usize,
        out: &mut MultiPoly,
    ) {
        if idx + 1 == exps.len() {
            exps[idx] = remaining;
            *out = out.add(&MultiPoly::monomial(nvars, exps, 1));
            exps[idx] = 0;
            return;
        }
        for take in 0..=remaining {
            exps[idx] = take;
            rec(exps, idx + 1, remaining - take, nvars, out);
            exps[idx] = 0;
        }
    }
    rec(&mut exps, 0, degree, nvars, &mut result);
    result
}

/// Determinant of a square polynomial matrix by first-row expansion with
/// memoized column subsets.
fn poly_det(h: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let m = h.len();
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    fn rec(h: &[Vec<MultiPoly>], nvars: usize, row: usize, cols: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
        if cols == 0 {
            return MultiPoly::one(nvars);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut result = MultiPoly::zero(nvars);
        let mut sign = 1i64;
        for j in 0..h.len() {
            if cols >> j & 1 == 0 {
                continue;
            }
            let minor = rec(h, nvars, row + 1, cols & !(1 << j), memo);
            let term = h[row][j].mul(&minor);
            result = if sign > 0 {
                result.add(&term)
            } else {
                result.sub(&term)
            };
            sign = -sign;
        }
        memo.insert(cols, result.clone());
        result
    }
    rec(h, nvars, 0, full, &mut memo)
}

/// The flagged Schur function, computed by the Jacobi-Trudi determinant and
/// independently by the flagged-tableau generating sum; the two must agree.
pub fn flagged_schur(shape: &[usize], flag: &[usize], nvars: usize) -> Result<MultiPoly, Error> {
    debug_assert_eq!(shape.len(), flag.len());
    let needed = flag.iter().copied().max().unwrap_or(0);
    debug_assert!(nvars >= needed);
    let m = shape.len();
    if m == 0 {
        return Ok(MultiPoly::one(nvars));
    }
    let h: Vec<Vec<MultiPoly>> = (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    let degree = shape[i - 1] as i64 - i as i64 + j as i64;
                    if degree < 0 {
                        MultiPoly::zero(nvars)
                    } else {
                        homogeneous(nvars, degree as usize, flag[i - 1])
                    }
                })
                .collect()
        })
        .collect();
    let determinant = poly_det(&h, nvars);

    let mut tableau_sum = MultiPoly::zero(nvars);
    for t in enumerate_flagged_ssyt(shape, flag, None)? {
        tableau_sum = tableau_sum.add(&MultiPoly::monomial(nvars, &t.content(nvars), 1));
    }
    assert_eq!(
        determinant, tableau_sum,
        "Jacobi-Trudi and tableau expansions disagree"
    );
    Ok(determinant)
}

/// Kostka number: semistandard tableaux of the given shape and content.
pub fn kostka(shape: &[usize], alpha: &[usize]) -> Result<i64, Error> {
    if shape.iter().sum::<usize>() != alpha.iter().sum::<usize>() {
        return Ok(0);
    }
    let flag = vec![alpha.len().max(1); shape.len()];
    let count = enumerate_flagged_ssyt(shape, &flag, Some(alpha))?.len();
    Ok(count as i64)
}

/// Exact coefficient by transition: expand to vexillary leaves and count
/// flagged tableaux of the residual content at each leaf.
pub fn count_coefficient_transition(code: &Code, alpha: &[usize]) -> Result<i64, Error> {
    count_coefficient_transition_with_budget(code, alpha, DEFAULT_TREE_NODES)
}

pub fn count_coefficient_transition_with_budget(
    code: &Code,
    alpha: &[usize],
    tree_budget: usize,
) -> Result<i64, Error> {
    let l = code.len();
    if alpha.iter().skip(l).any(|&a| a > 0) {
        return Ok(0);
    }
    if alpha.iter().sum::<usize>() != code.weight() {
        return Ok(0);
    }
    let alpha: Vec<usize> = (0..l).map(|i| alpha.get(i).copied().unwrap_or(0)).collect();
    let mut total = 0i64;
    for (delwt, leaf) in transition_expand_with_budget(code, tree_budget)? {
        if delwt.iter().zip(alpha.iter()).any(|(d, a)| d > a) {
            continue;
        }
        let content: Vec<usize> = alpha.iter().zip(delwt.iter()).map(|(a, d)| a - d).collect();
        let (shape, flag) = leaf.shape_and_flag().expect("leaves are vexillary");
        total += enumerate_flagged_ssyt(&shape, &flag, Some(&content))?.len() as i64;
    }
    Ok(total)
}

/// One step of a transition string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionStep {
    /// March move for the pivot in this row.
    March(usize),
    /// A maximal run of deletions in this row.
    Delete { row: usize, count: usize },
}

/// A counting witness: a transition string and a row-count matrix.
#[derive(Debug, Clone)]
pub struct WitnessPair {
    pub steps: Vec<TransitionStep>,
    pub matrix: Vec<Vec<usize>>,
}

/// The deletion weight of a transition string, over `len` rows.
pub fn deletion_weight(steps: &[TransitionStep], len: usize) -> Vec<usize> {
    let mut weight = vec![0usize; len];
    for step in steps {
        if let TransitionStep::Delete { row, count } = step {
            weight[row - 1] += count;
        }
    }
    weight
}

/// Polynomial-time verification that a pair witnesses the coefficient:
/// the string must walk the transition tree from `w` to a vexillary leaf,
/// the matrix must encode a flagged tableau of the leaf's shape, and the
/// deletion weight plus the tableau content must equal `alpha`.
pub fn verify_witness(pair: &WitnessPair, code: &Code, alpha: &[usize]) -> bool {
    let l = code.len();
    if pair.steps.len() > l * l {
        return false;
    }
    let mut current = code.clone();
    let mut previous_delete_row: Option<usize> = None;
    for step in &pair.steps {
        if current.is_vexillary() {
            return false; // leaves have no outgoing moves
        }
        let z = current
            .accessible_box()
            .expect("non-vexillary implies accessible");
        let r = z.row;
        let entries = current.entries().to_vec();
        let w = current.to_permutation();
        match *step {
            TransitionStep::Delete { row, count } => {
                if row != r || count == 0 {
                    return false;
                }
                if previous_delete_row == Some(row) {
                    return false; // runs must be maximal
                }
                // Deletion-count bound: the row must hold enough boxes
                // outside the dominant component.
                let dom_row = (1..=r).map(|i| w.apply(i)).min().unwrap() - 1;
                if entries[r - 1] < dom_row || entries[r - 1] - dom_row < count {
                    return false;
                }
                let mut next = entries;
                next[r - 1] -= count;
                current = Code::new(next);
                previous_delete_row = Some(row);
            }
            TransitionStep::March(i) => {
                let piv = pivots(&w, z).expect("accessible box of its own permutation");
                if !piv.contains(&Cell::new(i, w.apply(i))) {
                    return false;
                }
                let wi = w.apply(i);
                let dots_below = (1..r).filter(|&h| w.apply(h) < wi).count();
                let b = entries[r - 1] - ((wi - 1) - dots_below);
                let mut next = entries;
                next[i - 1] += b;
                next[r - 1] -= b;
                current = Code::new(next);
                previous_delete_row = None;
            }
        }
    }
    if !current.is_vexillary() {
        return false;
    }
    let Ok((shape, flag)) = current.shape_and_flag() else {
        return false;
    };
    if !validate_row_count_matrix(&pair.matrix, &shape, &flag) {
        return false;
    }
    let tableau = decode_row_count_matrix(&pair.matrix);
    let max_len = l.max(pair.matrix.len()).max(alpha.len());
    let mut weight = deletion_weight(&pair.steps, max_len);
    let content = tableau.content(max_len);
    for (w, c) in weight.iter_mut().zip(content.iter()) {
        *w += c;
    }
    (0..max_len).all(|i| weight[i] == alpha.get(i).copied().unwrap_or(0))
}
