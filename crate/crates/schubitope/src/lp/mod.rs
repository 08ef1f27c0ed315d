//! Exact-rational linear feasibility for the tableau polytopes.
//!
//! [`build_p`] realizes the full polytope over `n^2` variables: box bounds
//! per variable, one content equality per value, and column-prefix flag
//! inequalities. [`build_q`] realizes the column-compressed version over
//! `m*l` variables. Both use the coordinatization
//! `x = (a_{11},...,a_{n1},a_{12},...,a_{nn})` (columns outer, rows inner),
//! and the block order is fixed: lower bounds, upper bounds, content rows,
//! flag rows.
//!
//! Feasibility is decided by a phase-1 simplex over arbitrary-precision
//! rationals with Bland's anti-cycling rule; see [`simplex`]. There is no
//! floating point and no tolerance anywhere in this module. Because the full
//! system's matrix is totally unimodular, every vertex the solver returns on
//! a feasible instance is a 0/1 lattice point; [`integral_vertex`] relies on
//! exactly that.

mod round;
mod simplex;
mod tu;

pub use round::round_to_lattice;
pub use tu::{check_total_unimodularity, check_tu_by_minors, DEFAULT_TU_COLUMNS};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;
use crate::perm::{Code, Diagram};

pub type Rational = BigRational;

pub(crate) fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Constraint row sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Le,
    Eq,
}

/// One constraint: a sparse coefficient list against a right-hand side.
#[derive(Debug, Clone)]
pub struct Row {
    /// `(variable index, coefficient)`, sorted by variable index.
    pub coeffs: Vec<(usize, Rational)>,
    pub kind: RowKind,
    pub rhs: Rational,
}

/// A rational constraint system `M x (<=|=) b`.
#[derive(Debug, Clone)]
pub struct FeasibilitySystem {
    pub num_vars: usize,
    pub rows: Vec<Row>,
}

impl FeasibilitySystem {
    pub fn new(num_vars: usize) -> Self {
        FeasibilitySystem {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, coeffs: Vec<(usize, Rational)>, kind: RowKind, rhs: Rational) {
        debug_assert!(coeffs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(coeffs.iter().all(|&(j, _)| j < self.num_vars));
        self.rows.push(Row { coeffs, kind, rhs });
    }

    /// Dense coefficient matrix, row-major.
    pub fn dense_matrix(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| {
                let mut dense = vec![Rational::zero(); self.num_vars];
                for (j, c) in &r.coeffs {
                    dense[*j] = c.clone();
                }
                dense
            })
            .collect()
    }

    pub fn rhs_vector(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r.rhs.clone()).collect()
    }

    /// The dense matrix as machine integers, when all entries are integral.
    pub fn integer_matrix(&self) -> Option<Vec<Vec<i64>>> {
        self.dense_matrix()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| {
                        if c.is_integer() {
                            i64::try_from(c.to_integer()).ok()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Exact check that a point satisfies every row and has the right arity.
    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        self.rows.iter().all(|row| {
            let lhs: Rational = row
                .coeffs
                .iter()
                .map(|(j, c)| c * &point[*j])
                .sum();
            match row.kind {
                RowKind::Le => lhs <= row.rhs,
                RowKind::Eq => lhs == row.rhs,
            }
        })
    }

    /// Plain-text dump, one row per line: `coef*var + ... <= rhs`, with
    /// exact rationals printed as `p/q`.
    pub fn to_lp_text(&self, var_name: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let terms: Vec<String> = row
                .coeffs
                .iter()
                .map(|(j, c)| format!("{}*{}", c, var_name(*j)))
                .collect();
            let op = match row.kind {
                RowKind::Le => "<=",
                RowKind::Eq => "=",
            };
            let lhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            out.push_str(&format!("{lhs} {op} {}\n", row.rhs));
        }
        out
    }
}

/// A 0/1 lattice point of the full tableau polytope, indexed by
/// `(value i, column j)`, both 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint {
    pub n: usize,
    entries: Vec<u8>,
}

impl LatticePoint {
    /// Builds from rows: `rows[i-1][j-1]` is the entry for value `i`,
    /// column `j`.
    pub fn from_rows(n: usize, rows: Vec<Vec<u8>>) -> Self {
        debug_assert_eq!(rows.len(), n);
        let mut entries = vec![0u8; n * n];
        for (i, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.len(), n);
            for (j, &v) in row.iter().enumerate() {
                entries[j * n + i] = v;
            }
        }
        LatticePoint { n, entries }
    }

    pub fn get(&self, value: usize, col: usize) -> u8 {
        self.entries[(col - 1) * self.n + (value - 1)]
    }

    /// The flat coordinate vector in the system's variable order.
    pub fn flat(&self) -> &[u8] {
        &self.entries
    }
}

fn padded_alpha(alpha: &[usize], n: usize) -> Result<Vec<usize>, Error> {
    if alpha.iter().skip(n).any(|&a| a > 0) {
        return Err(Error::BadSystem("content vector extends beyond the grid"));
    }
    Ok((0..n).map(|i| alpha.get(i).copied().unwrap_or(0)).collect())
}

/// Shared emitter for the full system: box rows, content rows, flag rows,
/// in the fixed order and coordinatization of the worked examples.
fn build_p_rows(d: &Diagram, alpha: &[usize], content_kind: RowKind) -> Result<FeasibilitySystem, Error> {
    let n = d.grid_size();
    let alpha = padded_alpha(alpha, n)?;
    let sum: usize = alpha.iter().sum();
    if sum != d.len() {
        return Err(Error::DegreeMismatch {
            sum,
            cells: d.len(),
        });
    }
    let nv = n * n;
    let var = |i: usize, j: usize| (j - 1) * n + (i - 1);
    let mut sys = FeasibilitySystem::new(nv);
    // Lower box bounds: -x <= 0, one per variable in coordinate order.
    for v in 0..nv {
        sys.push_row(vec![(v, -Rational::one())], RowKind::Le, Rational::zero());
    }
    // Upper box bounds: x <= 1.
    for v in 0..nv {
        sys.push_row(vec![(v, Rational::one())], RowKind::Le, Rational::one());
    }
    // Content conditions: for each value i, sum over columns equals alpha_i.
    for i in 1..=n {
        let coeffs = (1..=n).map(|j| (var(i, j), Rational::one())).collect();
        sys.push_row(coeffs, content_kind, rat_int(alpha[i - 1] as i64));
    }
    // Flag conditions: -(x_{1j} + ... + x_{sj}) <= -#{(i,j) in D : i <= s}.
    for j in 1..=n {
        let rows_in_col = d.column_rows(j);
        for s in 1..=n {
            let coeffs = (1..=s).map(|i| (var(i, j), -Rational::one())).collect();
            let cnt = rows_in_col.iter().filter(|&&r| r <= s).count();
            sys.push_row(coeffs, RowKind::Le, rat_int(-(cnt as i64)));
        }
    }
    Ok(sys)
}

/// The full tableau polytope over `n^2` variables. Content rows are kept as
/// equalities; the all-inequality presentation used for the unimodularity
/// fixture is [`build_p_inequality_form`].
pub fn build_p(d: &Diagram, alpha: &[usize]) -> Result<FeasibilitySystem, Error> {
    build_p_rows(d, alpha, RowKind::Eq)
}

/// The same polytope written as a pure inequality system `M x <= b`. Under
/// the degree hyperplane the relaxed content rows are forced to equality by
/// the flag rows, so the polyhedron is unchanged; this is the presentation
/// whose matrix is checked for total unimodularity.
pub fn build_p_inequality_form(d: &Diagram, alpha: &[usize]) -> Result<FeasibilitySystem, Error> {
    build_p_rows(d, alpha, RowKind::Le)
}

/// A column compression: blocks of identical columns with representatives
/// and multiplicities, with all boxes confined to the top `m` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionData {
    pub m: usize,
    pub blocks: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl CompressionData {
    /// The trivial compression of an `n x n` grid: singleton blocks, `m = n`.
    pub fn trivial(n: usize) -> Self {
        CompressionData {
            m: n,
            blocks: (1..=n).map(|j| vec![j]).collect(),
            reps: (1..=n).collect(),
            sizes: vec![1; n],
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Checks the compression axioms against a concrete diagram.
    pub fn validate(&self, d: &Diagram) -> Result<(), Error> {
        let n = d.grid_size();
        if self.m > n {
            return Err(Error::InvalidCompression("m exceeds the grid"));
        }
        if d.cells().any(|c| c.row > self.m) {
            return Err(Error::InvalidCompression("boxes below row m"));
        }
        if self.blocks.len() != self.reps.len() || self.blocks.len() != self.sizes.len() {
            return Err(Error::InvalidCompression("block bookkeeping lengths differ"));
        }
        let mut covered = vec![false; n + 1];
        for (k, block) in self.blocks.iter().enumerate() {
            if block.is_empty() || self.sizes[k] != block.len() {
                return Err(Error::InvalidCompression("block size mismatch"));
            }
            if !block.contains(&self.reps[k]) {
                return Err(Error::InvalidCompression("representative outside its block"));
            }
            let rep_rows = d.column_rows(self.reps[k]);
            for &p in block {
                if p == 0 || p > n {
                    return Err(Error::InvalidCompression("block column outside the grid"));
                }
                if covered[p] {
                    return Err(Error::InvalidCompression("blocks are not disjoint"));
                }
                covered[p] = true;
                if d.column_rows(p) != rep_rows {
                    return Err(Error::InvalidCompression(
                        "columns in one block differ in box rows",
                    ));
                }
            }
        }
        for (j, &is_covered) in covered.iter().enumerate().skip(1) {
            if !is_covered && !d.column_rows(j).is_empty() {
                return Err(Error::InvalidCompression("a nonempty column is uncovered"));
            }
        }
        Ok(())
    }
}

/// The Rothe compression of the permutation with the given code: sorted
/// window values split the columns into singleton blocks `{w(sigma(k))}`
/// and the gap intervals between consecutive sorted values, whose columns
/// all carry identical box sets. Representatives are block minima. Runs in
/// `O(L^2)` from the code, without touching the grid.
pub fn build_compression_rothe(code: &Code) -> CompressionData {
    let l = code.len();
    let w = code.to_permutation();
    let mut sorted: Vec<usize> = (1..=l).map(|i| w.apply(i)).collect();
    sorted.sort_unstable();
    let mut blocks = Vec::new();
    let mut prev = 0usize;
    for &v in &sorted {
        if v > prev + 1 {
            blocks.push(((prev + 1)..v).collect::<Vec<usize>>());
        }
        blocks.push(vec![v]);
        prev = v;
    }
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    CompressionData {
        m: l,
        blocks,
        reps,
        sizes,
    }
}

/// The compressed system over `m * l` variables, from explicit per-block
/// data: `row_sets[k]` lists the box rows of the representative column of
/// block `k`. This is the natural minimal input for the decision pipeline.
pub fn build_q_from_row_data(
    m: usize,
    sizes: &[usize],
    row_sets: &[Vec<usize>],
    alpha_tilde: &[usize],
) -> Result<FeasibilitySystem, Error> {
    let l = sizes.len();
    if row_sets.len() != l {
        return Err(Error::InvalidCompression("row sets do not match blocks"));
    }
    if alpha_tilde.len() != m {
        return Err(Error::BadSystem("compressed content must have length m"));
    }
    if row_sets.iter().flatten().any(|&r| r == 0 || r > m) {
        return Err(Error::InvalidCompression("box rows outside 1..=m"));
    }
    let nv = m * l;
    let var = |i: usize, k: usize| (k - 1) * m + (i - 1);
    let mut sys = FeasibilitySystem::new(nv);
    for v in 0..nv {
        sys.push_row(vec![(v, -Rational::one())], RowKind::Le, Rational::zero());
    }
    for v in 0..nv {
        sys.push_row(vec![(v, Rational::one())], RowKind::Le, Rational::one());
    }
    // Content conditions with block multiplicities.
    for i in 1..=m {
        let coeffs = (1..=l)
            .map(|k| (var(i, k), rat_int(sizes[k - 1] as i64)))
            .collect();
        sys.push_row(coeffs, RowKind::Eq, rat_int(alpha_tilde[i - 1] as i64));
    }
    // Flag conditions against the representative columns.
    for k in 1..=l {
        for s in 1..=m {
            let coeffs = (1..=s).map(|i| (var(i, k), -Rational::one())).collect();
            let cnt = row_sets[k - 1].iter().filter(|&&r| r <= s).count();
            sys.push_row(coeffs, RowKind::Le, rat_int(-(cnt as i64)));
        }
    }
    Ok(sys)
}

/// The compressed polytope of a diagram under a compression. With the
/// trivial compression this produces exactly the same system as
/// [`build_p`].
pub fn build_q(
    d: &Diagram,
    compression: &CompressionData,
    alpha_tilde: &[usize],
) -> Result<FeasibilitySystem, Error> {
    compression.validate(d)?;
    let row_sets: Vec<Vec<usize>> = compression
        .reps
        .iter()
        .map(|&p| d.column_rows(p))
        .collect();
    build_q_from_row_data(compression.m, &compression.sizes, &row_sets, alpha_tilde)
}

/// Decides feasibility exactly. Returns a vertex (a basic feasible
/// solution) of the polyhedron when feasible, `None` otherwise.
pub fn lp_feasible(sys: &FeasibilitySystem) -> Option<Vec<Rational>> {
    let point = simplex::phase_one(sys)?;
    debug_assert!(sys.satisfied_by(&point));
    Some(point)
}

/// Feasibility of the full system together with the integral vertex that
/// total unimodularity guarantees. A fractional vertex coming back from the
/// solver would falsify the unimodularity argument, so it is reported as an
/// error rather than patched over.
pub fn integral_vertex(sys: &FeasibilitySystem) -> Result<Option<LatticePoint>, Error> {
    let n2 = sys.num_vars;
    let n = (0..=n2).find(|&k| k * k == n2).ok_or(Error::BadSystem(
        "integral vertex extraction expects a full n^2-variable system",
    ))?;
    let Some(point) = lp_feasible(sys) else {
        return Ok(None);
    };
    let mut entries = vec![0u8; n2];
    for (idx, value) in point.iter().enumerate() {
        if !value.is_integer() {
            return Err(Error::NonIntegralPoint(idx % n + 1, idx / n + 1));
        }
        let int = value.to_integer();
        if int.is_negative() || int > BigInt::one() {
            return Err(Error::InfeasiblePoint("vertex outside the unit box"));
        }
        entries[idx] = u8::try_from(int).unwrap();
    }
    Ok(Some(LatticePoint { n, entries }))
}
