//! `monocurve`: print the ideal families of a monomial curve and run verification suites.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use monocurve_core::curve::{build_matrix, cal_i, cal_j, f_poly, lambda_set, mono_i, mono_j};
use monocurve_core::sset::s_set;
use monocurve_core::verify::MAX_GROEBNER_D;
use monocurve_core::{
    CurveParams, Error, FieldChoice, Grevelex, Monomial, MonomialOrder, PolyIdeal, Rational, Suite, SuiteRequest, VerificationReport,
    Verifier,
};

#[derive(Debug, Parser)]
#[command(name = "monocurve", version, about = "Ideals of monomial curves: constructions and exact verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one member of an ideal family.
    Ideal(IdealArgs),
    /// Run verification suites and emit a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "X")]
    X,
    #[value(name = "fi")]
    Fi,
    #[value(name = "calJ")]
    CalJ,
    #[value(name = "calI")]
    CalI,
    #[value(name = "J")]
    J,
    #[value(name = "I")]
    I,
    #[value(name = "lambda")]
    Lambda,
    #[value(name = "S")]
    S,
}

#[derive(Debug, clap::Args)]
struct IdealArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Index i for fi, calJ, and J.
    #[arg(long)]
    i: Option<usize>,
    /// Degree n for calI, I, and lambda.
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Length j for lambda.
    #[arg(long)]
    j: Option<usize>,
    /// Comma-separated composition for S, e.g. `1,0,2`.
    #[arg(long, value_delimiter = ',')]
    a: Vec<u32>,
    /// Reduce the matrix X modulo x1.
    #[arg(long)]
    mod_x1: bool,
    /// One generator per line instead of comma-joined.
    #[arg(long)]
    lines: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, env = "MONOCURVE_N_MAX")]
    n_max: Option<u32>,
    #[arg(long, env = "MONOCURVE_K")]
    k: Option<usize>,
    /// Add f_1, ..., f_k in the leading suite.
    #[arg(long)]
    with_f: bool,
    /// `rational` or `fp:<p>`.
    #[arg(long, env = "MONOCURVE_FIELD", default_value = "rational")]
    field: String,
    #[arg(long, value_enum, env = "MONOCURVE_FORMAT", default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, env = "MONOCURVE_JOBS")]
    jobs: Option<usize>,
    /// Report zero elapsed time so output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

// Exit status 2: the request itself is unusable.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: Error) -> anyhow::Error {
    match e {
        Error::InvariantViolation(_) => e.into(),
        other => Usage(other.to_string()).into(),
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: Kind) -> anyhow::Result<T> {
    v.ok_or_else(|| Usage(format!("--kind {kind:?} requires --{flag}")).into())
}

fn join(items: Vec<String>, lines: bool) -> String {
    items.join(if lines { "\n" } else { ", " })
}

fn render_poly_ideal(ideal: &PolyIdeal<Rational>, lines: bool) -> String {
    join(ideal.gens().iter().map(|g| g.render(&Grevelex, 2)).collect(), lines)
}

fn cmd_ideal(args: &IdealArgs) -> anyhow::Result<String> {
    let d = args.d;
    let out = match args.kind {
        Kind::X => {
            let x = build_matrix(&CurveParams::new(d, args.m).map_err(usage)?, args.mod_x1).map_err(usage)?;
            let first = if args.mod_x1 { 2 } else { 1 };
            x.rows()
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|e| e.render(&Grevelex, first)).collect::<Vec<_>>().join(", ")))
                .collect::<Vec<_>>()
                .join("\n")
        }
        Kind::Fi => f_poly(d, need(args.i, "i", args.kind)?).map_err(usage)?.render(&Grevelex, 2),
        Kind::CalJ => render_poly_ideal(&cal_j(d, need(args.i, "i", args.kind)?).map_err(usage)?, args.lines),
        Kind::CalI => render_poly_ideal(&cal_i(d, need(args.n, "n", args.kind)?).map_err(usage)?, args.lines),
        Kind::J => join(mono_j(d, need(args.i, "i", args.kind)?).map_err(usage)?.render_gens(), args.lines),
        Kind::I => join(mono_i(d, need(args.n, "n", args.kind)?).map_err(usage)?.render_gens(), args.lines),
        Kind::Lambda => {
            let n = need(args.n, "n", args.kind)?;
            if n < 0 {
                bail!(Usage(format!("--n must be nonnegative for lambda, got {n}")));
            }
            let j = need(args.j, "j", args.kind)?;
            join(lambda_set(j, n as u32).iter().map(ToString::to_string).collect(), args.lines)
        }
        Kind::S => {
            if args.a.is_empty() {
                bail!(Usage("--kind S requires --a".into()));
            }
            let mut set: Vec<Monomial> = s_set(d, &args.a).map_err(usage)?.into_iter().collect();
            set.sort_by(|a, b| Grevelex.cmp(b, a));
            join(set.iter().map(|m| m.render(2)).collect(), args.lines)
        }
    };
    Ok(out)
}

fn requests(args: &VerifyArgs) -> anyhow::Result<Vec<SuiteRequest>> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL
            .into_iter()
            .filter(|s| {
                let skip = s.uses_groebner() && args.d > MAX_GROEBNER_D;
                if skip {
                    eprintln!("skipping {s}: Groebner suites are limited to d <= {MAX_GROEBNER_D}");
                }
                !skip
            })
            .collect()
    } else {
        let suite: Suite = args.suite.parse().map_err(usage)?;
        if suite.uses_groebner() && args.d > MAX_GROEBNER_D {
            bail!(Usage(format!(
                "suite {suite} computes Groebner bases and is limited to d <= {MAX_GROEBNER_D}; \
                 use a monomial suite (colon, regseq, length, alternating, scounts, gscolon, socle) for d = {}",
                args.d
            )));
        }
        vec![suite]
    };
    Ok(suites
        .into_iter()
        .map(|suite| SuiteRequest { m: args.m, n_max: args.n_max, k: args.k, with_f: args.with_f, ..SuiteRequest::new(suite, args.d) })
        .collect())
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<bool> {
    let field: FieldChoice = args.field.parse().map_err(usage)?;
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            bail!(Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("building the worker pool")?;
    }
    let verifier = Verifier::new(field).with_timing(!args.no_timing);
    let reports: Vec<VerificationReport> =
        requests(args)?.iter().map(|r| verifier.run(r).map_err(usage)).collect::<anyhow::Result<_>>()?;
    let text = match args.format {
        Format::Text => render::text(&reports),
        Format::Json => render::json(&reports),
        Format::Csv => render::csv(&reports)?,
    };
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(reports.iter().all(VerificationReport::all_passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Ideal(args) => cmd_ideal(args).map(|s| {
            println!("{s}");
            true
        }),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(suite: &str, d: usize) -> VerifyArgs {
        VerifyArgs {
            suite: suite.into(),
            d,
            m: 1,
            n_max: Some(3),
            k: None,
            with_f: false,
            field: "rational".into(),
            format: Format::Json,
            out: None,
            jobs: None,
            no_timing: true,
        }
    }

    #[test]
    fn all_skips_groebner_suites_for_large_d() {
        let reqs = requests(&args("all", 6)).unwrap();
        assert_eq!(reqs.len(), Suite::ALL.len() - 2);
        assert!(reqs.iter().all(|r| !r.suite.uses_groebner()));
        assert_eq!(requests(&args("all", 5)).unwrap().len(), Suite::ALL.len());
    }

    #[test]
    fn explicit_groebner_suite_refused_for_large_d() {
        let err = requests(&args("leading", 6)).unwrap_err();
        assert!(err.is::<Usage>());
    }
}
