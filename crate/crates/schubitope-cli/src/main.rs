//! Command-line surface for the Schubert coefficient toolkit.
//!
//! Exit codes: 0 = affirmative / success, 1 = zero coefficient (for
//! `decide`) or self-test failure, 2 = input error, 3 = budget exceeded.

mod query;
mod selftest;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schubitope::error::Error;
use schubitope::lp::{build_compression_rothe, build_p, build_q, lp_feasible, round_to_lattice};
use schubitope::perm::{grassmannian_for, Code, Permutation};
use schubitope::schubert::{
    coefficient_oracle_with_limit, count_coefficient_transition_with_budget, tableau_witness,
    transition_tree_with_budget, nonvanishing,
};
use schubitope::text::{parse_code, parse_content, parse_input, render_rothe, render_tree, Parsed, RotheRender};

use query::QueryResult;

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Deciding and counting Schubert polynomial coefficients: polytope
/// membership by exact linear programming, transition-tree counting, and
/// brute-force oracles for cross-checking.
#[derive(Parser)]
#[command(name = "schubitope", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a coefficient is nonzero (exit 0 = yes, 1 = no).
    Decide(DecideArgs),
    /// Count a coefficient exactly.
    Count(CountArgs),
    /// Render a Rothe diagram.
    Diagram(DiagramArgs),
    /// Render the transition tree of a code.
    Tree(TreeArgs),
    /// Dump the feasibility system in plain text.
    Polytope(PolytopeArgs),
    /// Run the built-in verification sweeps.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct DecideArgs {
    /// The code of the permutation, e.g. `--code 2,0,2`.
    #[arg(long)]
    code: String,
    /// The exponent vector, e.g. `--alpha 2,1,1`.
    #[arg(long)]
    alpha: String,
    /// Attach a column-strict tableau witness when the answer is yes.
    #[arg(long)]
    witness: bool,
    /// Derive the witness by stable-cycle rounding of a relaxed point
    /// instead of reading an integral vertex off the simplex basis.
    #[arg(long, requires = "witness")]
    rounding: bool,
    /// Cross-check against the divided-difference oracle (small inputs).
    #[arg(long)]
    oracle: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Transition,
    Oracle,
    Both,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    code: String,
    #[arg(long)]
    alpha: String,
    #[arg(long, value_enum, default_value_t = CountMethod::Transition)]
    method: CountMethod,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DiagramArgs {
    /// Permutation (`53841267`, `5 3 8 4 1 2 6 7`), or `c:`/`p:` inputs.
    input: Option<String>,
    /// Code form, e.g. `--code 4,2,5,3`.
    #[arg(long)]
    code: Option<String>,
    /// Mark the essential set.
    #[arg(long)]
    essential: bool,
    /// Mark the accessible box.
    #[arg(long)]
    accessible: bool,
}

#[derive(Args)]
struct TreeArgs {
    #[arg(long)]
    code: String,
}

#[derive(Args)]
struct PolytopeArgs {
    #[arg(long)]
    code: String,
    #[arg(long)]
    alpha: String,
    /// Dump the column-compressed system instead of the full one.
    #[arg(long)]
    compressed: bool,
}

#[derive(Args)]
struct SelftestArgs {
    /// `quick` sweeps S4-scale instances, `full` the S5/S6 suites.
    #[arg(value_enum, default_value_t = selftest::Scope::Quick)]
    scope: selftest::Scope,
    /// Seed for the randomized diagram sweeps.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Machine-readable summary.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Decide(args) => cmd_decide(args),
        Command::Count(args) => cmd_count(args),
        Command::Diagram(args) => cmd_diagram(args),
        Command::Tree(args) => cmd_tree(args),
        Command::Polytope(args) => cmd_polytope(args),
        Command::Selftest(args) => selftest::run(args.scope, args.seed, args.json),
    }
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT)
}

fn budget_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_BUDGET)
}

/// Budgets are environment-configurable; flags would clutter every command.
fn env_budget(name: &str, default: usize) -> usize {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

fn tree_budget() -> usize {
    env_budget(
        "SCHUBITOPE_TREE_NODES",
        schubitope::schubert::DEFAULT_TREE_NODES,
    )
}

fn oracle_degree() -> usize {
    env_budget(
        "SCHUBITOPE_ORACLE_DEGREE",
        schubitope::schubert::DEFAULT_ORACLE_DEGREE,
    )
}

/// Shared validation: the content must have the code's degree and no
/// support below the last code row, otherwise the coefficient is zero for
/// structural reasons and the query is reported as malformed.
fn parse_query(code: &str, alpha: &str) -> Result<(Code, Vec<usize>), String> {
    let code = parse_code(code).map_err(|e| e.to_string())?;
    let alpha = parse_content(alpha).map_err(|e| e.to_string())?;
    let l = code.len();
    if let Some(bad) = alpha.iter().skip(l).position(|&a| a > 0) {
        return Err(format!(
            "alpha_{} > 0, but coefficients vanish whenever alpha has support beyond row {} (the length of the code)",
            l + bad + 1,
            l
        ));
    }
    let sum: usize = alpha.iter().sum();
    if sum != code.weight() {
        return Err(format!(
            "degree mismatch: alpha sums to {sum} but the diagram has {} boxes",
            code.weight()
        ));
    }
    let mut alpha = alpha;
    alpha.resize(l, 0);
    Ok((code, alpha))
}

fn cmd_decide(args: DecideArgs) -> ExitCode {
    let (code, alpha) = match parse_query(&args.code, &args.alpha) {
        Ok(q) => q,
        Err(e) => return input_error(e),
    };
    let start = Instant::now();
    let verdict = nonvanishing(&code, &alpha);
    let mut result = QueryResult::decision(verdict, "schubitope-lp", start.elapsed());
    if args.witness && verdict && args.rounding {
        let w = code.to_permutation();
        let d = w.rothe();
        let n = d.grid_size();
        let mut padded = alpha.clone();
        padded.resize(n, 0);
        let sys = match build_p(&d, &padded) {
            Ok(s) => s,
            Err(e) => return input_error(e),
        };
        let point = lp_feasible(&sys).expect("verdict yes means feasible");
        let tableau = round_to_lattice(&d, &padded, &point)
            .and_then(|lattice| schubitope::tableau::tableau_from_integral_point(&d, &lattice));
        match tableau {
            Ok(t) if t.is_perfect() && t.is_column_strict() => {
                result.witness = Some(t.to_string());
                result.method = "schubitope-lp+rounding".into();
            }
            _ => {
                eprintln!("internal error: rounded witness fails verification");
                return ExitCode::from(EXIT_INPUT);
            }
        }
    } else if args.witness && verdict {
        match tableau_witness(&code, &alpha) {
            Ok(Some(t)) => {
                // Re-verify before printing; a bad witness is an internal bug.
                if !t.is_perfect() || !t.is_column_strict() {
                    eprintln!("internal error: extracted witness fails verification");
                    return ExitCode::from(EXIT_INPUT);
                }
                result.witness = Some(t.to_string());
            }
            Ok(None) => unreachable!("witness exists exactly when the verdict is yes"),
            Err(e) => return input_error(e),
        }
    }
    if args.oracle {
        let w = code.to_permutation();
        match coefficient_oracle_with_limit(&w, &alpha, oracle_degree()) {
            Ok(c) => {
                if (c > 0) != verdict {
                    eprintln!("internal error: oracle disagrees with the decision");
                    return ExitCode::from(EXIT_INPUT);
                }
                result.coefficient = Some(c);
                result.method = "schubitope-lp+oracle".into();
            }
            Err(Error::BudgetExceeded { .. }) => {
                eprintln!("note: oracle skipped, permutation exceeds the degree guard");
            }
            Err(e) => return input_error(e),
        }
    }
    result.print(args.json);
    if verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NO)
    }
}

fn cmd_count(args: CountArgs) -> ExitCode {
    let (code, alpha) = match parse_query(&args.code, &args.alpha) {
        Ok(q) => q,
        Err(e) => return input_error(e),
    };
    let start = Instant::now();
    let transition = if args.method != CountMethod::Oracle {
        match count_coefficient_transition_with_budget(&code, &alpha, tree_budget()) {
            Ok(c) => Some(c),
            Err(e @ Error::BudgetExceeded { .. }) => return budget_error(e),
            Err(e) => return input_error(e),
        }
    } else {
        None
    };
    let oracle = if args.method != CountMethod::Transition {
        let w = code.to_permutation();
        match coefficient_oracle_with_limit(&w, &alpha, oracle_degree()) {
            Ok(c) => Some(c),
            Err(e @ Error::BudgetExceeded { .. }) => return budget_error(e),
            Err(e) => return input_error(e),
        }
    } else {
        None
    };
    if let (Some(t), Some(o)) = (transition, oracle) {
        if t != o {
            eprintln!("internal error: transition count {t} disagrees with oracle {o}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let coefficient = transition.or(oracle).expect("one method always ran");
    let method = match args.method {
        CountMethod::Transition => "transition",
        CountMethod::Oracle => "divided-differences",
        CountMethod::Both => "both",
    };
    let result = QueryResult::count(coefficient, method, start.elapsed());
    result.print(args.json);
    ExitCode::SUCCESS
}

fn cmd_diagram(args: DiagramArgs) -> ExitCode {
    let w: Permutation = match (&args.input, &args.code) {
        (Some(_), Some(_)) | (None, None) => {
            return input_error("provide exactly one of a positional input or --code");
        }
        (None, Some(code)) => match parse_code(code) {
            Ok(c) => c.to_permutation(),
            Err(e) => return input_error(e),
        },
        (Some(input), None) => match parse_input(input) {
            Ok(Parsed::Perm(w)) => w,
            Ok(Parsed::Code(c)) => c.to_permutation(),
            Ok(Parsed::Partition(shape)) => grassmannian_for(&shape),
            Err(e) => return input_error(e),
        },
    };
    print!(
        "{}",
        render_rothe(
            &w,
            RotheRender {
                essential: args.essential,
                accessible: args.accessible,
            },
        )
    );
    ExitCode::SUCCESS
}

fn cmd_tree(args: TreeArgs) -> ExitCode {
    let code = match parse_code(&args.code) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    match transition_tree_with_budget(&code, tree_budget()) {
        Ok(root) => {
            print!("{}", render_tree(&root));
            println!("leaves: {}", root.leaf_count());
            ExitCode::SUCCESS
        }
        Err(e @ Error::BudgetExceeded { .. }) => budget_error(e),
        Err(e) => input_error(e),
    }
}

fn cmd_polytope(args: PolytopeArgs) -> ExitCode {
    let (code, alpha) = match parse_query(&args.code, &args.alpha) {
        Ok(q) => q,
        Err(e) => return input_error(e),
    };
    let w = code.to_permutation();
    if args.compressed {
        let compression = build_compression_rothe(&code);
        let m = compression.m;
        let sys = match build_q(&w.rothe(), &compression, &alpha) {
            Ok(s) => s,
            Err(e) => return input_error(e),
        };
        print!(
            "{}",
            sys.to_lp_text(|v| format!("a[{},{}]", v % m + 1, v / m + 1))
        );
    } else {
        let d = w.rothe();
        let n = d.grid_size();
        let mut padded = alpha;
        padded.resize(n, 0);
        let sys = match build_p(&d, &padded) {
            Ok(s) => s,
            Err(e) => return input_error(e),
        };
        print!(
            "{}",
            sys.to_lp_text(|v| format!("a[{},{}]", v % n + 1, v / n + 1))
        );
    }
    ExitCode::SUCCESS
}
