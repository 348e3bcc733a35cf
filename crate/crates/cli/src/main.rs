//! `sheets`: command-line surface for the sheets-core engine.
//!
//! Boolean subcommands print `true` or `false` and exit 0; verification
//! subcommands exit nonzero when a check fails. Argument parse failures
//! exit 2 with usage, domain failures (invalid partition for a kind, weight
//! mismatches, unreadable data files) exit 1 with a one-line reason.
//! Identical invocations produce byte-identical output.

use std::error::Error as StdError;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use sheets_core::exceptional::{verify_counterexample_pairs, Catalog};
use sheets_core::oracle::{centralizer_dim, jordan_matrix, jordan_rank_profile};
use sheets_core::orbits::{
    induce, is_rigid, rigid_closure_counterexamples_threaded, LeviSpec, NilpotentOrbit,
};
use sheets_core::sheets::{counterexample_pairs_threaded, sheet_closure, sheet_poset_dot};
use sheets_core::{enumerate_partitions, Family, LieAlgebraKind, OracleInt, Partition};

#[derive(Parser)]
#[command(
    name = "sheets",
    version,
    about = "Exact combinatorics of sheets and nilpotent orbits of classical Lie algebras"
)]
struct Cli {
    /// Emit one JSON object {command, inputs, result} instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the exhaustive searches; results are identical
    /// for every value.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
    threads: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dual (conjugate) partition.
    Dual { lambda: Partition },

    /// Whether the first partition dominates the second.
    Dominance { lambda: Partition, mu: Partition },

    /// Whether the sl_n sheet of the first partition lies in the closure of
    /// the sheet of the second.
    SheetOrder {
        lambda: Partition,
        lambda_prime: Partition,
    },

    /// All sheets contained in the closure of the given sl_n sheet.
    SheetClosure { lambda_prime: Partition },

    /// Hasse diagram of the sheet order on partitions of n, as Graphviz DOT.
    SheetPoset {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Write the DOT text to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },

    /// Witnesses that the closure of a sheet is not a union of sheets.
    ///
    /// With `--family A --n <n>`: pairs of partitions of n, contained orbit
    /// first, that are dominance-comparable but not sheet-comparable. With
    /// `--kind <K>:<N>`: pairs (rigid, non-rigid) of orbits with the
    /// non-rigid one in the closure of the rigid one.
    Counterexamples {
        #[arg(long, conflicts_with = "kind")]
        family: Option<String>,
        #[arg(long, conflicts_with = "kind", value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long)]
        kind: Option<LieAlgebraKind>,
    },

    /// Whether the orbit with the given Jordan type is rigid.
    Rigid {
        kind: LieAlgebraKind,
        lambda: Partition,
    },

    /// Induce an orbit from a Levi subalgebra with the given gl blocks.
    ///
    /// Block orbits default to zero orbits and are given as partitions
    /// joined by `/`, e.g. `--orbits 2,1/1,1`; the tail orbit defaults to
    /// the zero orbit of the residual algebra.
    Induce {
        kind: LieAlgebraKind,
        #[arg(long, required = true, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long)]
        orbits: Option<String>,
        #[arg(long)]
        tail: Option<Partition>,
    },

    /// Collapse to the dominance-maximum valid partition (families B, C, D).
    Collapse {
        kind: LieAlgebraKind,
        lambda: Partition,
    },

    /// Dimension of the nilpotent orbit with the given Jordan type.
    Dim {
        kind: LieAlgebraKind,
        lambda: Partition,
    },

    /// Check the recorded exceptional pairs: rigid upper orbit, non-rigid
    /// lower orbit, closure containment.
    VerifyExceptional {
        /// Catalog file to check instead of the bundled dataset.
        #[arg(long, value_name = "FILE")]
        data: Option<PathBuf>,
    },

    /// Cross-check the type A partition formulas against exact matrix
    /// computations, for all partitions of weight up to the bound.
    OracleCheck {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
}

struct Outcome {
    lines: Vec<String>,
    json: Value,
    status: i32,
}

impl Outcome {
    fn ok(lines: Vec<String>, command: &str, inputs: Value, result: Value) -> Outcome {
        Outcome {
            lines,
            json: json!({ "command": command, "inputs": inputs, "result": result }),
            status: 0,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let threads = cli.threads as usize;
    match run(cli.command, threads) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.json);
            } else {
                for line in &outcome.lines {
                    println!("{line}");
                }
            }
            std::process::exit(outcome.status);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}

fn run(command: Command, threads: usize) -> Result<Outcome, Box<dyn StdError>> {
    match command {
        Command::Dual { lambda } => {
            let dual = lambda.dual();
            Ok(Outcome::ok(
                vec![dual.to_string()],
                "dual",
                json!({ "lambda": lambda.to_string() }),
                json!(dual.to_string()),
            ))
        }
        Command::Dominance { lambda, mu } => {
            let result = lambda.dominates(&mu)?;
            Ok(Outcome::ok(
                vec![result.to_string()],
                "dominance",
                json!({ "lambda": lambda.to_string(), "mu": mu.to_string() }),
                json!(result),
            ))
        }
        Command::SheetOrder {
            lambda,
            lambda_prime,
        } => {
            let result = sheets_core::sheets::sheet_precedes(&lambda, &lambda_prime)?;
            Ok(Outcome::ok(
                vec![result.to_string()],
                "sheet-order",
                json!({ "lambda": lambda.to_string(), "lambda_prime": lambda_prime.to_string() }),
                json!(result),
            ))
        }
        Command::SheetClosure { lambda_prime } => {
            let closure = sheet_closure(&lambda_prime);
            let lines: Vec<String> = closure.iter().map(Partition::to_string).collect();
            Ok(Outcome::ok(
                lines.clone(),
                "sheet-closure",
                json!({ "lambda_prime": lambda_prime.to_string() }),
                json!(lines),
            ))
        }
        Command::SheetPoset { n, dot } => {
            let text = sheet_poset_dot(n as usize);
            let lines = match &dot {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    Vec::new()
                }
                None => text.lines().map(str::to_string).collect(),
            };
            Ok(Outcome::ok(
                lines,
                "sheet-poset",
                json!({ "n": n, "dot": dot.as_ref().map(|p| p.display().to_string()) }),
                json!(text),
            ))
        }
        Command::Counterexamples { family, n, kind } => counterexamples(family, n, kind, threads),
        Command::Rigid { kind, lambda } => {
            let orbit = NilpotentOrbit::new(kind, lambda.clone())?;
            let result = is_rigid(&orbit);
            Ok(Outcome::ok(
                vec![result.to_string()],
                "rigid",
                json!({ "kind": kind.to_string(), "lambda": lambda.to_string() }),
                json!(result),
            ))
        }
        Command::Induce {
            kind,
            blocks,
            orbits,
            tail,
        } => induce_command(kind, blocks, orbits, tail),
        Command::Collapse { kind, lambda } => {
            let collapsed = kind.collapse(&lambda)?;
            Ok(Outcome::ok(
                vec![collapsed.to_string()],
                "collapse",
                json!({ "kind": kind.to_string(), "lambda": lambda.to_string() }),
                json!(collapsed.to_string()),
            ))
        }
        Command::Dim { kind, lambda } => {
            let dim = kind.orbit_dimension(&lambda)?;
            Ok(Outcome::ok(
                vec![dim.to_string()],
                "dim",
                json!({ "kind": kind.to_string(), "lambda": lambda.to_string() }),
                json!(dim),
            ))
        }
        Command::VerifyExceptional { data } => verify_exceptional(data),
        Command::OracleCheck { max_n } => oracle_check(max_n as usize),
    }
}

fn counterexamples(
    family: Option<String>,
    n: Option<u32>,
    kind: Option<LieAlgebraKind>,
    threads: usize,
) -> Result<Outcome, Box<dyn StdError>> {
    if let Some(kind) = kind {
        let pairs = rigid_closure_counterexamples_threaded(kind, threads);
        let lines: Vec<String> = pairs
            .iter()
            .map(|(upper, lower)| format!("{} {}", upper.partition(), lower.partition()))
            .collect();
        let json_pairs: Vec<Value> = pairs
            .iter()
            .map(|(upper, lower)| {
                json!([upper.partition().to_string(), lower.partition().to_string()])
            })
            .collect();
        return Ok(Outcome::ok(
            lines,
            "counterexamples",
            json!({ "kind": kind.to_string() }),
            json!(json_pairs),
        ));
    }
    match (family.as_deref(), n) {
        (Some("A"), Some(n)) => {
            let pairs = counterexample_pairs_threaded(n as usize, threads);
            let lines: Vec<String> = pairs
                .iter()
                .map(|(contained, enclosing)| format!("{contained} {enclosing}"))
                .collect();
            let json_pairs: Vec<Value> = pairs
                .iter()
                .map(|(contained, enclosing)| {
                    json!([contained.to_string(), enclosing.to_string()])
                })
                .collect();
            Ok(Outcome::ok(
                lines,
                "counterexamples",
                json!({ "family": "A", "n": n }),
                json!(json_pairs),
            ))
        }
        (Some(other), _) if other != "A" => Cli::command()
            .error(
                clap::error::ErrorKind::InvalidValue,
                "--family only supports A; use --kind for the other families",
            )
            .exit(),
        _ => Cli::command()
            .error(
                clap::error::ErrorKind::MissingRequiredArgument,
                "counterexamples needs either --family A --n <n> or --kind <K>:<N>",
            )
            .exit(),
    }
}

fn induce_command(
    kind: LieAlgebraKind,
    blocks: Vec<usize>,
    orbits: Option<String>,
    tail: Option<Partition>,
) -> Result<Outcome, Box<dyn StdError>> {
    let block_sum: usize = blocks.iter().sum();
    let tail_n = match kind.family() {
        Family::A => 0,
        _ => kind
            .natural_dim()
            .checked_sub(2 * block_sum)
            .ok_or_else(|| sheets_core::Error::MalformedLevi {
                reason: format!("blocks too large for {kind}"),
            })?,
    };
    let levi = LeviSpec::new(kind, blocks.clone(), tail_n)?;
    let gl_orbits: Vec<Partition> = match &orbits {
        Some(text) => text
            .split('/')
            .map(str::parse)
            .collect::<sheets_core::Result<_>>()?,
        None => blocks.iter().map(|&a| Partition::ones(a)).collect(),
    };
    let tail_orbit = tail.unwrap_or_else(|| Partition::ones(tail_n));
    let induced = induce(&levi, &gl_orbits, &tail_orbit)?;
    Ok(Outcome::ok(
        vec![induced.partition().to_string()],
        "induce",
        json!({
            "kind": kind.to_string(),
            "blocks": blocks,
            "orbits": gl_orbits.iter().map(Partition::to_string).collect::<Vec<_>>(),
            "tail": tail_orbit.to_string(),
        }),
        json!(induced.partition().to_string()),
    ))
}

fn verify_exceptional(data: Option<PathBuf>) -> Result<Outcome, Box<dyn StdError>> {
    let catalog = match &data {
        Some(path) => Catalog::parse(&std::fs::read_to_string(path)?)?,
        None => Catalog::bundled(),
    };
    let report = verify_counterexample_pairs(&catalog);
    let lines: Vec<String> = report.to_string().lines().map(str::to_string).collect();
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "description": c.description,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    let mut outcome = Outcome::ok(
        lines,
        "verify-exceptional",
        json!({ "data": data.as_ref().map(|p| p.display().to_string()) }),
        json!({ "checks": checks, "passed": report.passed(), "total": report.total() }),
    );
    outcome.status = if report.is_success() { 0 } else { 1 };
    Ok(outcome)
}

fn oracle_check(max_n: usize) -> Result<Outcome, Box<dyn StdError>> {
    let mut lines = Vec::new();
    let mut failures = 0usize;
    for n in 1..=max_n {
        let all = enumerate_partitions(n);
        let mut centralizer_ok = true;
        for lam in &all {
            let matrix = jordan_matrix::<OracleInt>(lam)?;
            if centralizer_dim(&matrix) != lam.dual_square_sum() {
                centralizer_ok = false;
                failures += 1;
                lines.push(format!("FAIL n={n}: centralizer of [{lam}] disagrees"));
            }
        }
        let profiles: Vec<Vec<usize>> = all
            .iter()
            .map(|lam| jordan_rank_profile::<OracleInt>(lam, n))
            .collect::<sheets_core::Result<_>>()?;
        let mut closure_ok = true;
        let mut pair_count = 0usize;
        for (i, mu) in all.iter().enumerate() {
            for (j, lam) in all.iter().enumerate() {
                pair_count += 1;
                let by_rank = profiles[i].iter().zip(&profiles[j]).all(|(l, u)| l <= u);
                if by_rank != lam.dominates(mu)? {
                    closure_ok = false;
                    failures += 1;
                    lines.push(format!(
                        "FAIL n={n}: rank criterion disagrees with dominance for [{mu}] vs [{lam}]"
                    ));
                }
            }
        }
        let mut line = format!("n={n}: {} partitions, {pair_count} pairs", all.len());
        write!(
            line,
            ", centralizer {}, closure {}",
            if centralizer_ok { "ok" } else { "FAILED" },
            if closure_ok { "ok" } else { "FAILED" }
        )
        .expect("write to string");
        lines.push(line);
    }
    let summary = if failures == 0 {
        format!("oracle agrees with the partition formulas for all n <= {max_n}")
    } else {
        format!("{failures} oracle checks failed")
    };
    lines.push(summary.clone());
    let mut outcome = Outcome::ok(
        lines,
        "oracle-check",
        json!({ "max_n": max_n }),
        json!({ "failures": failures, "summary": summary }),
    );
    outcome.status = if failures == 0 { 0 } else { 1 };
    Ok(outcome)
}
