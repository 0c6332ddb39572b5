//! Command-line front end: compute characters, list and classify polytope
//! vertices, evaluate per-vertex tangent cone contributions, and run the
//! verification suite.
//!
//! All arithmetic is exact; output is deterministic for a fixed seed and
//! configuration regardless of the worker thread count. Exit codes: 0 on
//! success (for `verify`, only when every check passes), 1 when a
//! verification check fails, 2 on usage or computation errors.

use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use gtbrion::{
    contributions_report, format_rational, parse_rational, pattern_count, prepare_run, schur_eval,
    schur_polynomial, validate_x_point, verify_report, vertex_contribution, vertices_report,
    ContributionRecord, ContributionsReport, Rational, RunInputs, Sampler, VerifyReport,
    VertexRecord, VerticesReport, Weight, DEFAULT_PATTERN_CAP,
};

#[derive(Parser)]
#[command(
    name = "gtbrion",
    version,
    about = "Exact gl_n characters via pattern sums, permutation sums, and vertex tangent cones",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character as a Laurent polynomial, or evaluate it at a point
    Schur(SchurArgs),
    /// Evaluate the character as a sum over permutations at a point
    Weyl(PointArgs),
    /// List polytope vertices with equality graphs, labels, and weights
    Vertices(CommonArgs),
    /// Per-vertex tangent cone contributions at a generic point
    Contributions(PointArgs),
    /// Run the verification suite; exit 0 only if every check passes
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct CommonArgs {
    /// Highest weight as comma-separated integers, non-increasing
    #[arg(long, env = "GTBRION_LAMBDA", value_parser = parse_weight)]
    lambda: Weight,

    /// Seed driving every sampled point and perturbation
    #[arg(long, env = "GTBRION_SEED", default_value_t = 0)]
    seed: u64,

    /// Output format (csv is per-vertex rows and only applies to vertex reports)
    #[arg(long, env = "GTBRION_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Refuse pattern enumerations larger than this
    #[arg(long, env = "GTBRION_CAP", default_value_t = DEFAULT_PATTERN_CAP)]
    cap: u64,

    /// Worker threads for per-vertex evaluation (default: all cores)
    #[arg(long, env = "GTBRION_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct SchurArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Evaluation point as comma-separated rationals ("2,3/2,5"); omit to
    /// print the polynomial itself
    #[arg(long, env = "GTBRION_AT", value_parser = parse_point)]
    at: Option<Point>,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Evaluation point as comma-separated rationals; sampled from the seed
    /// when omitted. Degenerate points are rejected, never adjusted
    #[arg(long, env = "GTBRION_AT", value_parser = parse_point)]
    at: Option<Point>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// x-point override, comma-separated rationals; rejected if degenerate
    #[arg(long, env = "GTBRION_AT", value_parser = parse_point)]
    at: Option<Point>,

    /// t-point override for the projection identity, one rational per
    /// pattern coordinate in row-major order; rejected if degenerate
    #[arg(long = "t-at", env = "GTBRION_T_AT", value_parser = parse_point)]
    t_at: Option<Point>,

    /// Regular dominant weight projecting onto lambda; enables the
    /// projection identity check
    #[arg(long, env = "GTBRION_REGULAR_COMPANION", value_parser = parse_weight)]
    regular_companion: Option<Weight>,
}

#[derive(Clone)]
struct Point(Vec<Rational>);

fn parse_weight(s: &str) -> Result<Weight, String> {
    let entries: Vec<i64> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad weight entry {:?}: {e}", p.trim()))
        })
        .collect::<Result<_, _>>()?;
    if entries.is_empty() {
        return Err("weight needs at least one entry".into());
    }
    let lambda = Weight::from_vec(entries);
    lambda.require_dominant().map_err(|e| e.to_string())?;
    Ok(lambda)
}

fn parse_point(s: &str) -> Result<Point, String> {
    s.split(',')
        .map(|p| parse_rational(p.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(Point)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let jobs = match &cli.command {
        Command::Schur(a) => a.common.jobs,
        Command::Weyl(a) | Command::Contributions(a) => a.common.jobs,
        Command::Vertices(a) => a.jobs,
        Command::Verify(a) => a.common.jobs,
    };
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("initializing the worker pool")?;
    }

    match cli.command {
        Command::Schur(args) => cmd_schur(args),
        Command::Weyl(args) => cmd_weyl(args),
        Command::Vertices(args) => cmd_vertices(args),
        Command::Contributions(args) => cmd_contributions(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Rayon map over vertices; output order matches `inputs.cones`, so reports
/// are identical whatever the pool size.
fn parallel_values(inputs: &RunInputs, c: &[i64]) -> anyhow::Result<Vec<Rational>> {
    let values = inputs
        .cones
        .par_iter()
        .map(|(_, cone)| vertex_contribution(cone, &inputs.x, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(values)
}

#[derive(Serialize)]
struct SchurReport {
    lambda: Vec<i64>,
    n: usize,
    pattern_count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

fn cmd_schur(args: SchurArgs) -> anyhow::Result<ExitCode> {
    let lambda = &args.common.lambda;
    let count = pattern_count(lambda)?;
    let mut report = SchurReport {
        lambda: lambda.entries().to_vec(),
        n: lambda.n(),
        pattern_count: count.to_string(),
        polynomial: None,
        at: None,
        value: None,
    };
    match &args.at {
        Some(Point(x)) => {
            if x.len() != lambda.n() {
                bail!("point has {} entries, lambda has {}", x.len(), lambda.n());
            }
            let value = schur_eval(lambda, x, args.common.cap)?;
            report.at = Some(x.iter().map(format_rational).collect());
            report.value = Some(format_rational(&value));
        }
        None => {
            let poly = schur_polynomial(lambda, args.common.cap)?;
            report.polynomial = Some(poly.to_string());
        }
    }
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => bail!("csv output is only available for vertex reports"),
        Format::Text => match (&report.value, &report.polynomial) {
            (Some(value), _) => println!("{value}"),
            (None, Some(poly)) => println!("{poly}"),
            _ => unreachable!(),
        },
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct WeylReport {
    lambda: Vec<i64>,
    n: usize,
    x_point: Vec<String>,
    value: String,
}

fn cmd_weyl(args: PointArgs) -> anyhow::Result<ExitCode> {
    let lambda = &args.common.lambda;
    let n = lambda.n();
    let x = match &args.at {
        Some(Point(x)) => {
            if x.len() != n {
                bail!("point has {} entries, lambda has {}", x.len(), n);
            }
            validate_x_point(x, &[])?;
            x.clone()
        }
        None => Sampler::new(args.common.seed).x_point(n, &[])?,
    };
    let value = gtbrion::weyl_character(lambda, &x)?;
    let report = WeylReport {
        lambda: lambda.entries().to_vec(),
        n,
        x_point: x.iter().map(format_rational).collect(),
        value: format_rational(&value),
    };
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => bail!("csv output is only available for vertex reports"),
        Format::Text => println!(
            "weyl character of ({}) at ({}) = {}",
            ints(&report.lambda),
            report.x_point.join(", "),
            report.value
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_vertices(args: CommonArgs) -> anyhow::Result<ExitCode> {
    let report = vertices_report(&args.lambda)?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => print_vertices_csv(&report),
        Format::Text => print_vertices_text(&report),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_contributions(args: PointArgs) -> anyhow::Result<ExitCode> {
    let x_override = args.at.as_ref().map(|Point(x)| x.as_slice());
    let inputs = prepare_run(&args.common.lambda, args.common.seed, x_override)?;
    let values = parallel_values(&inputs, &inputs.c)?;
    let report = contributions_report(&inputs, &values)?;
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => print_contributions_csv(&report.contributions),
        Format::Text => print_contributions_text(&report),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let x_override = args.at.as_ref().map(|Point(x)| x.as_slice());
    let t_override = args.t_at.as_ref().map(|Point(t)| t.as_slice());
    let inputs = prepare_run(&args.common.lambda, args.common.seed, x_override)?;
    let values = parallel_values(&inputs, &inputs.c)?;
    let alt_values = parallel_values(&inputs, &inputs.c_alt)?;
    let report = verify_report(
        &inputs,
        &values,
        &alt_values,
        args.common.cap,
        args.regular_companion.as_ref(),
        t_override,
    )?;
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Csv => print_contributions_csv(&report.contributions),
        Format::Text => print_verify_text(&report),
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn ints(v: &[i64]) -> String {
    v.iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn pattern_string(rows: &[Vec<i64>]) -> String {
    rows.iter().map(|r| ints(r)).collect::<Vec<_>>().join(" / ")
}

fn perm_string(p: &Option<Vec<usize>>) -> String {
    p.as_ref()
        .map(|w| {
            w.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

fn flag_string(b: Option<bool>) -> String {
    b.map(|v| v.to_string()).unwrap_or_default()
}

fn vertex_tally(n: usize) -> String {
    if n == 1 {
        "1 vertex".into()
    } else {
        format!("{n} vertices")
    }
}

fn vertex_label(v: &VertexRecord) -> String {
    match (v.simplicial, v.acyclic) {
        (Some(true), _) => "simplicial".into(),
        (Some(false), _) => "non-simplicial".into(),
        (_, Some(true)) => "acyclic".into(),
        (_, Some(false)) => "cyclic".into(),
        _ => String::new(),
    }
}

fn print_vertices_csv(report: &VerticesReport) {
    println!("pattern,mu,simplicial,acyclic,permutation");
    for v in &report.vertices {
        println!(
            "{},{},{},{},{}",
            pattern_string(&v.pattern),
            ints(&v.mu),
            flag_string(v.simplicial),
            flag_string(v.acyclic),
            perm_string(&v.permutation)
        );
    }
}

fn print_vertices_text(report: &VerticesReport) {
    let counts = match report.simplicial_count {
        Some(s) => format!("{}, {s} simplicial", vertex_tally(report.vertex_count)),
        None => format!(
            "{}, {} acyclic",
            vertex_tally(report.vertex_count),
            report.acyclic_count
        ),
    };
    println!("lambda ({}): {counts}", ints(&report.lambda));
    for v in &report.vertices {
        let perm = perm_string(&v.permutation);
        let perm = if perm.is_empty() {
            String::new()
        } else {
            format!(", w = {perm}")
        };
        println!(
            "  {} [{}] mu = ({}){perm}",
            pattern_string(&v.pattern),
            vertex_label(v),
            ints(&v.mu)
        );
    }
}

fn print_contributions_csv(records: &[ContributionRecord]) {
    println!("pattern,mu,simplicial,acyclic,permutation,contribution,zero,matched");
    for r in records {
        let matched = if let Some(w) = &r.matched_weyl_summand {
            format!(
                "w {}",
                w.iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        } else if let Some(mu) = &r.matched_group {
            format!("mu {}", ints(mu))
        } else {
            String::new()
        };
        println!(
            "{},{},{},{},{},{},{},{}",
            pattern_string(&r.vertex.pattern),
            ints(&r.vertex.mu),
            flag_string(r.vertex.simplicial),
            flag_string(r.vertex.acyclic),
            perm_string(&r.vertex.permutation),
            r.contribution,
            r.zero,
            matched
        );
    }
}

fn print_contributions_text(report: &ContributionsReport) {
    println!(
        "lambda ({}), seed {}, x = ({})",
        ints(&report.lambda),
        report.seed,
        report.x_point.join(", ")
    );
    for r in &report.contributions {
        println!(
            "  {} [{}] mu = ({}): {}",
            pattern_string(&r.vertex.pattern),
            vertex_label(&r.vertex),
            ints(&r.vertex.mu),
            r.contribution
        );
    }
    println!("total: {}", report.total);
}

fn print_verify_text(report: &VerifyReport) {
    println!(
        "lambda ({}) [{}], seed {}, x = ({})",
        ints(&report.lambda),
        if report.regular {
            "regular"
        } else {
            "singular"
        },
        report.seed,
        report.x_point.join(", ")
    );
    let counts = match report.simplicial_count {
        Some(s) => format!("{}, {s} simplicial", vertex_tally(report.vertex_count)),
        None => format!(
            "{}, {} acyclic",
            vertex_tally(report.vertex_count),
            report.acyclic_count
        ),
    };
    println!("{counts}");
    println!(
        "totals: brion {} | weyl {} | patterns {}",
        report.brion_total, report.weyl_total, report.schur_oracle
    );
    for c in &report.checks {
        println!(
            "[{}] {}: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    println!(
        "verdict: {}",
        if report.all_passed() {
            "all checks passed"
        } else {
            "checks failed"
        }
    );
}
