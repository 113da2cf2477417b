//! Command-line front end: parse inputs, dispatch to the library, and emit
//! human-readable tables or machine-readable JSON.
//!
//! Exit codes: 0 on success, 1 when a verification campaign finds a
//! violation (or a replay fails to reproduce), 2 on usage or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use entrocount::bounds::{DEFAULT_GRID_HI, DEFAULT_GRID_LO, DEFAULT_GRID_POINTS};
use entrocount::{
    alpha_bound, bregman_bound, check_cardinality_bound, check_intersection_family_bound,
    check_shearer, check_subadditivity, conditional_entropy, fraction_vector,
    implicit_family_size_ceiling, joint_entropy, optimize_alpha, permanent_ryser, replay_violation,
    run_all_suites, run_entropy_suite, run_family_suite, run_permanent_suite, run_shearer_suite,
    thc_entropy, AlphaParameter, BinaryMatrix, BoundReport, CheckOutcome, ConditionalForm,
    CoverFamily, DiscreteDistribution, Error, IntersectionBoundOutcome, JointTable,
    OptimizationResult, RunConfig, SetFamily, SuiteOutcome, Violation,
};

#[derive(Parser)]
#[command(
    name = "entrocount",
    version,
    about = "Deformed-entropy inequalities and permanent bounds for (0,1)-matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropies of a distribution (JSON array) or joint table (JSON object)
    Entropy(EntropyArgs),
    /// Permanent bounds for a (0,1)-matrix or bipartite edge list
    Bound(BoundArgs),
    /// Set-family cardinality and intersection bounds
    Family(FamilyArgs),
    /// Shearer-type checks on a joint table and a coordinate cover
    Shearer(ShearerArgs),
    /// Seeded randomized verification campaigns
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Daroczy,
    Weighted,
    Both,
}

#[derive(Args)]
struct EntropyArgs {
    /// Input file: a bare JSON array or {"shape": [...], "probs": [...]}
    input: PathBuf,
    /// Entropic order; repeatable
    #[arg(long = "alpha", value_name = "ORDER")]
    alphas: Vec<f64>,
    /// Target coordinates (1-indexed, comma-separated) for conditional forms
    #[arg(long, value_delimiter = ',')]
    target: Vec<usize>,
    /// Conditioning coordinates (1-indexed, comma-separated)
    #[arg(long, value_delimiter = ',')]
    given: Vec<usize>,
    /// Which conditional form(s) to print
    #[arg(long, value_enum, default_value = "both")]
    form: FormArg,
    /// Rescale input masses to total 1 instead of validating the sum
    #[arg(long)]
    renormalize: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct BoundArgs {
    /// Matrix text file (rows of 0/1), or an edge list with --graph
    input: PathBuf,
    /// Treat the input as a bipartite edge list: first line n, then "l r" lines
    #[arg(long)]
    graph: bool,
    /// Entropic order; repeatable
    #[arg(long = "alpha", value_name = "ORDER")]
    alphas: Vec<f64>,
    /// Minimize the ceiling over the order parameter
    #[arg(long)]
    optimize: bool,
    #[arg(long, default_value_t = DEFAULT_GRID_LO)]
    grid_lo: f64,
    #[arg(long, default_value_t = DEFAULT_GRID_HI)]
    grid_hi: f64,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyCheck {
    Cardinality,
    Intersection,
    Both,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family JSON, inline or a file path: {"n": ..., "sets": [[1-indexed elements], ...]}
    input: String,
    #[arg(long, value_enum, default_value = "both")]
    checks: FamilyCheck,
    /// Entropic order; repeatable
    #[arg(long = "alpha", value_name = "ORDER")]
    alphas: Vec<f64>,
    /// Exploratory: scan orders in [1, 3.67] for the best implicit size ceiling
    #[arg(long)]
    scan: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct ShearerArgs {
    /// Joint table JSON file
    #[arg(long)]
    table: PathBuf,
    /// Cover JSON file: {"n": ..., "groups": [[1-indexed coords], ...]}
    #[arg(long)]
    cover: PathBuf,
    /// Entropic order; repeatable
    #[arg(long = "alpha", value_name = "ORDER")]
    alphas: Vec<f64>,
    /// Rescale table masses to total 1
    #[arg(long)]
    renormalize: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Entropy,
    Shearer,
    Family,
    Permanent,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum)]
    suite: Suite,
    /// Seed of the instance stream (ENTROCOUNT_SEED overrides)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Slack for entropy-valued comparisons
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Entry density of the random matrices in the permanent suite
    #[arg(long, default_value_t = 0.5)]
    bernoulli_p: f64,
    /// Entropic order; repeatable (empty = suite defaults)
    #[arg(long = "alpha", value_name = "ORDER")]
    alphas: Vec<f64>,
    /// Re-evaluate a violation dump instead of running the suite
    #[arg(long, value_name = "FILE")]
    replay: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Entropy(args) => cmd_entropy(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Family(args) => cmd_family(args),
        Command::Shearer(args) => cmd_shearer(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("entrocount: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Ingestion(format!("{}: {e}", path.display())))
}

fn parse_alphas(raw: &[f64], default: &[f64]) -> Result<Vec<AlphaParameter>, Error> {
    let values = if raw.is_empty() { default } else { raw };
    values.iter().map(|&v| AlphaParameter::new(v)).collect()
}

/// 1-indexed coordinate list from the command line to 0-based indices.
fn to_zero_based(coords: &[usize]) -> Result<Vec<usize>, Error> {
    coords
        .iter()
        .map(|&c| {
            c.checked_sub(1)
                .ok_or_else(|| Error::Argument("coordinates are 1-indexed".into()))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// entropy
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EntropyRow {
    alpha: f64,
    entropy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    conditional_daroczy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conditional_weighted: Option<f64>,
}

fn cmd_entropy(args: EntropyArgs) -> Result<ExitCode, Error> {
    let text = read_file(&args.input)?;
    let alphas = parse_alphas(&args.alphas, &[1.0])?;
    let trimmed = text.trim_start();

    let table = if trimmed.starts_with('{') {
        Some(JointTable::from_json_str(&text, args.renormalize)?)
    } else {
        None
    };
    let conditional = !args.target.is_empty();
    if conditional && table.is_none() {
        return Err(Error::Argument(
            "conditional entropies need a joint table input".into(),
        ));
    }

    let mut rows = Vec::new();
    for alpha in &alphas {
        let row = match &table {
            None => {
                let d = DiscreteDistribution::from_json_str(&text, args.renormalize)?;
                EntropyRow {
                    alpha: alpha.value(),
                    entropy: thc_entropy(&d, *alpha),
                    conditional_daroczy: None,
                    conditional_weighted: None,
                }
            }
            Some(t) => {
                let target = if args.target.is_empty() {
                    (0..t.num_coords()).collect()
                } else {
                    to_zero_based(&args.target)?
                };
                let entropy = joint_entropy(t, &target, *alpha)?;
                let (mut daroczy, mut weighted) = (None, None);
                if conditional {
                    let given = to_zero_based(&args.given)?;
                    if args.form != FormArg::Weighted {
                        daroczy = Some(conditional_entropy(
                            t,
                            &target,
                            &given,
                            *alpha,
                            ConditionalForm::Daroczy,
                        )?);
                    }
                    if args.form != FormArg::Daroczy {
                        weighted = Some(conditional_entropy(
                            t,
                            &target,
                            &given,
                            *alpha,
                            ConditionalForm::Weighted,
                        )?);
                    }
                }
                EntropyRow {
                    alpha: alpha.value(),
                    entropy,
                    conditional_daroczy: daroczy,
                    conditional_weighted: weighted,
                }
            }
        };
        rows.push(row);
    }

    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&rows).expect("serializable")),
        Format::Table => {
            println!(
                "{:<10} {:>14} {:>16} {:>16}",
                "alpha", "entropy", "H(T|G)", "H~(T|G)"
            );
            for r in &rows {
                let fmt = |v: Option<f64>| match v {
                    Some(x) => format!("{x:.10}"),
                    None => "-".to_string(),
                };
                println!(
                    "{:<10} {:>14.10} {:>16} {:>16}",
                    r.alpha,
                    r.entropy,
                    fmt(r.conditional_daroczy),
                    fmt(r.conditional_weighted)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

fn parse_edge_list(text: &str) -> Result<BinaryMatrix, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Ingestion("edge list is empty".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::Ingestion(format!("vertex count: {e}")))?;
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let mut toks = line.split_whitespace();
        let (l, r) = (toks.next(), toks.next());
        match (l, r, toks.next()) {
            (Some(l), Some(r), None) => {
                let l: usize = l
                    .parse()
                    .map_err(|e| Error::Ingestion(format!("edge {}: {e}", i + 1)))?;
                let r: usize = r
                    .parse()
                    .map_err(|e| Error::Ingestion(format!("edge {}: {e}", i + 1)))?;
                edges.push((l, r));
            }
            _ => {
                return Err(Error::Ingestion(format!(
                    "edge {}: expected two vertex numbers",
                    i + 1
                )))
            }
        }
    }
    BinaryMatrix::from_bipartite_graph(&edges, n)
}

/// Exact permanents are attached to bound reports up to this dimension.
const EXACT_PERMANENT_LIMIT: usize = 26;

fn cmd_bound(args: BoundArgs) -> Result<ExitCode, Error> {
    let text = read_file(&args.input)?;
    let matrix = if args.graph {
        parse_edge_list(&text)?
    } else {
        BinaryMatrix::from_text(&text)?
    };
    let alphas = parse_alphas(&args.alphas, &[2.0])?;

    let permanent = if matrix.n() <= EXACT_PERMANENT_LIMIT {
        Some(permanent_ryser(&matrix)?)
    } else {
        None
    };
    let bregman = if matrix.has_zero_row() {
        0.0
    } else {
        bregman_bound(matrix.row_sums())?
    };
    let reports: Vec<_> = alphas.iter().map(|&a| alpha_bound(&matrix, a)).collect();
    let optimization = if args.optimize {
        Some(optimize_alpha(
            &matrix,
            args.grid_lo,
            args.grid_hi,
            args.grid_points,
        )?)
    } else {
        None
    };

    #[derive(Serialize)]
    struct BoundOutput<'a> {
        n: usize,
        row_sums: &'a [usize],
        permanent: Option<String>,
        bregman: f64,
        reports: &'a [BoundReport],
        #[serde(skip_serializing_if = "Option::is_none")]
        optimization: Option<&'a OptimizationResult>,
    }

    match args.format {
        Format::Json => {
            let out = BoundOutput {
                n: matrix.n(),
                row_sums: matrix.row_sums(),
                permanent: permanent.map(|p| p.to_string()),
                bregman,
                reports: &reports,
                optimization: optimization.as_ref(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            println!(
                "matrix: {0}x{0}, row sums {1:?}",
                matrix.n(),
                matrix.row_sums()
            );
            match permanent {
                Some(p) => println!("permanent (exact): {p}"),
                None => println!("permanent (exact): skipped (n > {EXACT_PERMANENT_LIMIT})"),
            }
            println!("bregman bound:     {bregman:.10}");
            println!(
                "{:<10} {:>14} {:>18} {:>14} {:>8}",
                "alpha", "rhs", "ceiling", "integer", "vacuous"
            );
            for r in &reports {
                let ceiling = if r.vacuous {
                    "inf".to_string()
                } else {
                    format!("{:.10}", r.ceiling)
                };
                let integer = r
                    .integer_ceiling
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{:<10} {:>14.10} {:>18} {:>14} {:>8}",
                    r.alpha,
                    r.rhs_entropy_space,
                    ceiling,
                    integer,
                    if r.vacuous { "yes" } else { "no" }
                );
            }
            if let Some(opt) = &optimization {
                println!(
                    "optimum: ceiling {:.10} at alpha {:.8} ({} evaluations)",
                    opt.best_ceiling,
                    opt.best_alpha,
                    opt.trace.len()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FamilyRow {
    alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    cardinality: Option<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersection: Option<IntersectionBoundOutcome>,
}

#[derive(Serialize)]
struct ScanEntry {
    alpha: f64,
    size_ceiling: Option<u64>,
}

#[derive(Serialize)]
struct SizeCeilingScan {
    exploratory: bool,
    k: usize,
    lambda: f64,
    grid: Vec<ScanEntry>,
}

fn cmd_family(args: FamilyArgs) -> Result<ExitCode, Error> {
    let text = if args.input.trim_start().starts_with('{') {
        args.input.clone()
    } else {
        read_file(&PathBuf::from(&args.input))?
    };
    let family = SetFamily::from_json_str(&text)?;
    let alphas = parse_alphas(&args.alphas, &[1.0])?;

    let uniform_k = family.uniform_size();
    let want_intersection =
        args.checks == FamilyCheck::Intersection || args.checks == FamilyCheck::Both;
    if args.checks == FamilyCheck::Intersection && uniform_k.is_none() {
        return Err(Error::Argument(
            "intersection check requires a k-uniform family".into(),
        ));
    }

    let mut rows = Vec::new();
    for &alpha in &alphas {
        let cardinality = if args.checks != FamilyCheck::Intersection {
            Some(check_cardinality_bound(&family, alpha)?)
        } else {
            None
        };
        let intersection = match (want_intersection, uniform_k) {
            (true, Some(k)) => Some(check_intersection_family_bound(&family, k, alpha)?),
            _ => None,
        };
        rows.push(FamilyRow {
            alpha: alpha.value(),
            cardinality,
            intersection,
        });
    }

    let scan = if args.scan {
        let k = uniform_k.ok_or_else(|| {
            Error::Argument("the size-ceiling scan requires a k-uniform family".into())
        })?;
        let fractions = fraction_vector(&family)?;
        let lambda: f64 = fractions
            .fractions()
            .iter()
            .map(|&lj| lj * lj / k as f64)
            .sum();
        let mut grid = Vec::new();
        for a in entrocount::campaign::intersection_alpha_grid() {
            let size_ceiling = implicit_family_size_ceiling(k, lambda, AlphaParameter::new(a)?)?;
            grid.push(ScanEntry {
                alpha: a,
                size_ceiling,
            });
        }
        Some(SizeCeilingScan {
            exploratory: true,
            k,
            lambda,
            grid,
        })
    } else {
        None
    };

    #[derive(Serialize)]
    struct FamilyOutput<'a> {
        m: usize,
        n: usize,
        checks: &'a [FamilyRow],
        #[serde(skip_serializing_if = "Option::is_none")]
        size_ceiling_scan: Option<&'a SizeCeilingScan>,
    }

    match args.format {
        Format::Json => {
            let out = FamilyOutput {
                m: family.m(),
                n: family.n(),
                checks: &rows,
                size_ceiling_scan: scan.as_ref(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            println!("family: m = {}, ground set 1..={}", family.m(), family.n());
            for row in &rows {
                if let Some(c) = &row.cardinality {
                    println!(
                        "alpha {:<8} cardinality:  lhs {:>12.8}  rhs {:>12.8}  holds {}",
                        row.alpha, c.lhs, c.rhs, c.holds
                    );
                }
                if let Some(i) = &row.intersection {
                    println!(
                        "alpha {:<8} intersection: lhs {:>12.8}  rhs {:>12.8}  holds {}  precondition {}",
                        row.alpha, i.lhs, i.rhs, i.holds, i.precondition_met
                    );
                }
            }
            if let Some(s) = &scan {
                println!(
                    "size-ceiling scan (exploratory, k = {}, lambda = {:.8}):",
                    s.k, s.lambda
                );
                for e in &s.grid {
                    match e.size_ceiling {
                        Some(m) => println!("  alpha {:<20} m <= {m}", e.alpha),
                        None => println!("  alpha {:<20} unbounded", e.alpha),
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// shearer
// ---------------------------------------------------------------------------

fn cmd_shearer(args: ShearerArgs) -> Result<ExitCode, Error> {
    let table = JointTable::from_json_str(&read_file(&args.table)?, args.renormalize)?;
    let cover = CoverFamily::from_json_str(&read_file(&args.cover)?)?;
    let alphas = parse_alphas(&args.alphas, &[1.0])?;

    #[derive(Serialize)]
    struct ShearerRow {
        alpha: f64,
        k: usize,
        shearer: CheckOutcome,
        subadditivity: CheckOutcome,
    }

    let mut rows = Vec::new();
    for &alpha in &alphas {
        rows.push(ShearerRow {
            alpha: alpha.value(),
            k: cover.k(),
            shearer: check_shearer(&table, &cover, alpha)?,
            subadditivity: check_subadditivity(&table, alpha)?,
        });
    }

    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct ShearerOutput<'a> {
                checks: &'a [ShearerRow],
            }
            println!(
                "{}",
                serde_json::to_string(&ShearerOutput { checks: &rows }).expect("serializable")
            );
        }
        Format::Table => {
            println!("cover: {} groups, k = {}", cover.groups().len(), cover.k());
            for row in &rows {
                for (name, c) in [
                    ("shearer", &row.shearer),
                    ("subadditivity", &row.subadditivity),
                ] {
                    println!(
                        "alpha {:<8} {:<14} lhs {:>12.8}  rhs {:>12.8}  slack {:>12.4e}  holds {}",
                        row.alpha,
                        name,
                        c.lhs,
                        c.rhs,
                        c.slack(),
                        c.holds
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    if let Some(path) = &args.replay {
        return cmd_replay(path, args.format);
    }

    let seed = match std::env::var("ENTROCOUNT_SEED") {
        Ok(s) => s
            .parse::<u64>()
            .map_err(|e| Error::Argument(format!("ENTROCOUNT_SEED: {e}")))?,
        Err(_) => args.seed,
    };
    let config = RunConfig {
        seed,
        tolerance: args.tolerance,
        alpha_list: args.alphas.clone(),
        instances: args.instances,
        matrix_density: args.bernoulli_p,
    };

    let outcomes: Vec<SuiteOutcome> = match args.suite {
        Suite::Entropy => vec![run_entropy_suite(&config)?],
        Suite::Shearer => vec![run_shearer_suite(&config)?],
        Suite::Family => vec![run_family_suite(&config)?],
        Suite::Permanent => vec![run_permanent_suite(&config)?],
        Suite::All => run_all_suites(&config)?,
    };

    let all_passed = outcomes.iter().all(|o| o.passed());
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&outcomes).expect("serializable")
        ),
        Format::Table => {
            println!(
                "{:<10} {:>9} {:>9} {:>11} {:>13} {:>15} {:>9}",
                "suite",
                "checks",
                "passes",
                "violations",
                "worst_slack",
                "worst_eq_gap",
                "excluded"
            );
            for o in &outcomes {
                println!(
                    "{:<10} {:>9} {:>9} {:>11} {:>13.4e} {:>15.4e} {:>9}",
                    o.suite,
                    o.checks_run,
                    o.passes(),
                    o.violations.len(),
                    o.worst_slack,
                    o.worst_equality_gap,
                    o.excluded_zero_rows
                );
            }
            for o in &outcomes {
                for v in &o.violations {
                    println!(
                        "{}",
                        serde_json::to_string(v).expect("violations are serializable")
                    );
                }
            }
            println!("{}", if all_passed { "PASS" } else { "FAIL" });
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Accepts a bare violation object, an array of them, or whole suite
/// reports from `verify --format json` (violations extracted).
fn parse_replay_file(text: &str) -> Result<Vec<Violation>, Error> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Ingestion(format!("replay file: {e}")))?;
    let items: Vec<serde_json::Value> = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    let mut violations = Vec::new();
    for item in items {
        if item.get("violations").is_some() {
            let nested: Vec<Violation> = serde_json::from_value(item["violations"].clone())
                .map_err(|e| Error::Ingestion(format!("replay file: {e}")))?;
            violations.extend(nested);
        } else {
            violations.push(
                serde_json::from_value(item)
                    .map_err(|e| Error::Ingestion(format!("replay file: {e}")))?,
            );
        }
    }
    if violations.is_empty() {
        return Err(Error::Argument("replay file contains no violations".into()));
    }
    Ok(violations)
}

fn cmd_replay(path: &PathBuf, format: Format) -> Result<ExitCode, Error> {
    let violations = parse_replay_file(&read_file(path)?)?;

    let mut all_reproduced = true;
    let mut rows = Vec::new();
    for v in &violations {
        let (lhs, rhs) = replay_violation(v)?;
        let reproduced = (lhs - v.lhs).abs() <= 1e-15 * v.lhs.abs().max(1.0)
            && (rhs - v.rhs).abs() <= 1e-15 * v.rhs.abs().max(1.0);
        all_reproduced &= reproduced;
        rows.push(json!({
            "check": v.check,
            "alpha": v.alpha,
            "stored_lhs": v.lhs,
            "stored_rhs": v.rhs,
            "replayed_lhs": lhs,
            "replayed_rhs": rhs,
            "reproduced": reproduced,
        }));
    }

    match format {
        Format::Json => println!("{}", serde_json::to_string(&rows).expect("serializable")),
        Format::Table => {
            for r in &rows {
                println!(
                    "{:<28} alpha {:<8} lhs {:>18.12e} rhs {:>18.12e} reproduced {}",
                    r["check"].as_str().unwrap(),
                    r["alpha"].as_f64().unwrap(),
                    r["replayed_lhs"].as_f64().unwrap(),
                    r["replayed_rhs"].as_f64().unwrap(),
                    r["reproduced"]
                );
            }
        }
    }
    Ok(if all_reproduced {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
