//! Command-line front end: exact knot invariants, perturbative invariants
//! of 0-surgeries, cover counts, and the elimination reports, with text or
//! JSON output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use charslope::census::{parse_knot_spec, Census, KnotRecord, KnotSpec};
use charslope::loopexp::{
    lambda1_residue, lambda1_shortcut, p1_from_theta, pretzel_theta_hat, v3_from_theta,
    PretzelParams,
};
use charslope::pi1::{low_index, surgery_presentation, tietze_simplify, wirtinger, LowIndexOptions};
use charslope::pipeline::{characterize_zero, distinguish, Report};
use charslope::Rat;

const FIXTURES_ENV: &str = "CHARSLOPE_FIXTURES";

#[derive(Parser)]
#[command(
    name = "charslope",
    about = "Exact invariants of knots and 0-surgeries, and characterizing-slope reports",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Fixture directory (overrides the built-in records and the
    /// CHARSLOPE_FIXTURES environment variable)
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical invariants of a classified knot: Delta, Conway, det,
    /// sigma, genus, dim HFK-hat(K,1)
    Invariants { knot: String },
    /// lambda_1(S^3_0(K); 0) for a pretzel knot, exact, by both routes
    Lambda1 { knot: String },
    /// The finite-type invariant v_3 = Theta-hat(1)/2 for a pretzel knot
    V3 { knot: String },
    /// Count conjugacy classes of low-index subgroups of pi_1 of a surgery
    Covers {
        knot: String,
        #[command(flatten)]
        opts: CoverArgs,
    },
    /// Replay the 0-surgery characterization argument
    Characterize { knot: String },
    /// Distinguish r-surgeries on two classified knots
    Distinguish {
        first: String,
        second: String,
        /// Surgery slope, as an integer or p/q
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        slope: String,
    },
}

#[derive(Args)]
struct CoverArgs {
    /// Integral surgery slope
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    slope: i64,
    /// Maximum cover degree (desk-scale budget)
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=7))]
    index: u8,
    /// Extension-step budget for the subgroup search
    #[arg(long, default_value_t = 100_000_000)]
    node_budget: u64,
    /// Search worker threads (0 = all available cores)
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

/// Domain failure: exit code 1.
struct DomainError(String);

impl<E: std::error::Error> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

enum Outcome {
    Usage(String),
    Domain(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(Outcome::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Outcome::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<String, Outcome> {
    let census = load_census(cli)?;
    match &cli.command {
        Command::Invariants { knot } => {
            let spec = parse_spec(knot)?;
            let record = census.lookup(&spec).map_err(domain)?;
            Ok(render_invariants(&record, cli.json))
        }
        Command::Lambda1 { knot } => {
            let spec = parse_spec(knot)?;
            let (value, _) = pretzel_perturbative(&spec).map_err(|e| Outcome::Domain(e.0))?;
            Ok(render_value(knot, "lambda1", &value, cli.json))
        }
        Command::V3 { knot } => {
            let spec = parse_spec(knot)?;
            let (_, value) = pretzel_perturbative(&spec).map_err(|e| Outcome::Domain(e.0))?;
            Ok(render_value(knot, "v3", &value, cli.json))
        }
        Command::Covers { knot, opts } => {
            let spec = parse_spec(knot)?;
            let record = census.lookup(&spec).map_err(domain)?;
            let counts = cover_counts(&record, opts).map_err(|e| Outcome::Domain(e.0))?;
            if cli.json {
                Ok(serde_json::to_string_pretty(&serde_json::json!({
                    "knot": record.spec.to_string(),
                    "slope": opts.slope,
                    "classes_by_index": counts,
                }))
                .unwrap())
            } else {
                Ok(counts
                    .iter()
                    .map(|(i, c)| format!("{i}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
        }
        Command::Characterize { knot } => {
            let spec = parse_spec(knot)?;
            let report = characterize_zero(&census, &spec).map_err(domain)?;
            Ok(render_report(&report, cli.json))
        }
        Command::Distinguish { first, second, slope } => {
            let a = parse_spec(first)?;
            let b = parse_spec(second)?;
            let slope: Rat = slope
                .parse()
                .map_err(|_| Outcome::Usage(format!("invalid slope `{slope}`; use p or p/q")))?;
            let report = distinguish(&census, &a, &b, &slope).map_err(domain)?;
            Ok(render_report(&report, cli.json))
        }
    }
}

fn domain<E: std::error::Error>(e: E) -> Outcome {
    Outcome::Domain(e.to_string())
}

fn parse_spec(text: &str) -> Result<KnotSpec, Outcome> {
    // malformed knot names are usage errors, like any other bad argument
    parse_knot_spec(text).map_err(|e| Outcome::Usage(e.to_string()))
}

fn load_census(cli: &Cli) -> Result<Census, Outcome> {
    let dir = cli
        .fixtures
        .clone()
        .or_else(|| std::env::var_os(FIXTURES_ENV).map(PathBuf::from));
    match dir {
        Some(dir) => Census::load_dir(&dir).map_err(domain),
        None => Ok(Census::builtin()),
    }
}

fn render_invariants(record: &KnotRecord, json: bool) -> String {
    let conway = record.seifert.conway();
    if json {
        serde_json::to_string_pretty(&serde_json::json!({
            "knot": record.spec.to_string(),
            "names": record.names,
            "delta": record.delta.to_string(),
            "conway": conway.to_string(),
            "det": record.determinant.to_string(),
            "sigma": record.signature,
            "genus": record.genus,
            "dim_hfk_top": record.dim_hfk_top,
        }))
        .unwrap()
    } else {
        [
            format!("knot        = {}", record.spec),
            format!("delta       = {}", record.delta),
            format!("conway      = {conway}"),
            format!("det         = {}", record.determinant),
            format!("sigma       = {}", record.signature),
            format!("genus       = {}", record.genus),
            format!("dim_hfk_top = {}", record.dim_hfk_top),
        ]
        .join("\n")
    }
}

/// (lambda_1, v_3) of a pretzel knot; the two lambda_1 routes must agree.
fn pretzel_perturbative(spec: &KnotSpec) -> Result<(Rat, Rat), DomainError> {
    let normalized = spec.normalize();
    let charslope::census::KnotFamily::Pretzel { p, q, r } = normalized.family else {
        return Err(DomainError(format!(
            "the 2-loop polynomial is only tabulated for pretzel knots, not {spec}"
        )));
    };
    if normalized.mirrored {
        return Err(DomainError(format!(
            "mirrored pretzel {spec} does not normalize into the tabulated family; \
             lambda_1 and v_3 are not computed across mirrors"
        )));
    }
    let params = PretzelParams::new(p, q, r)?;
    let theta = pretzel_theta_hat(&params);
    let v3 = v3_from_theta(&theta);
    let p1 = p1_from_theta(&theta);
    let delta = charslope::seifert::pretzel_seifert(p, q, r)?.alexander();
    let shortcut = lambda1_shortcut(&delta, &p1)?;
    let residue = lambda1_residue(&delta, &p1)?;
    if shortcut != residue {
        return Err(DomainError("internal: lambda1 routes disagree".to_string()));
    }
    Ok((shortcut, v3))
}

fn render_value(knot: &str, name: &str, value: &Rat, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(&serde_json::json!({
            "knot": knot,
            name: value.to_string(),
        }))
        .unwrap()
    } else {
        value.to_string()
    }
}

fn cover_counts(record: &KnotRecord, opts: &CoverArgs) -> Result<Vec<(usize, u64)>, DomainError> {
    let Some(pd) = &record.pd else {
        return Err(DomainError(format!(
            "no PD fixture for {}; covers need a diagram",
            record.spec
        )));
    };
    let peripheral = wirtinger(pd)?;
    let filled = surgery_presentation(&peripheral, opts.slope);
    let simplified = tietze_simplify(&filled);
    let workers = if opts.workers == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        opts.workers
    };
    let search = LowIndexOptions {
        max_index: opts.index as usize,
        node_budget: opts.node_budget,
        workers,
        ..Default::default()
    };
    let counts = low_index(&simplified, &search)?;
    Ok(counts.into_iter().collect())
}

fn render_report(report: &Report, json: bool) -> String {
    if json {
        return report.to_json();
    }
    let mut out = Vec::new();
    out.push(format!("target:     {}", report.target));
    out.push(format!("slope:      {}", report.slope));
    out.push(format!("conclusion: {}", enum_name(&report.conclusion)));
    out.push("candidates:".to_string());
    for c in &report.candidates {
        let tag = match &c.obstruction {
            Some(o) => format!(" [{o}]"),
            None => String::new(),
        };
        out.push(format!("  - {}: {}{}", c.spec, enum_name(&c.verdict), tag));
        for e in &c.evidence {
            out.push(format!("      {e}"));
        }
    }
    if !report.axioms.is_empty() {
        out.push("axioms:".to_string());
        for a in &report.axioms {
            out.push(format!("  - {}: {}", a.tag, a.statement));
        }
    }
    for note in &report.notes {
        out.push(format!("note: {note}"));
    }
    out.join("\n")
}

fn enum_name<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}
