//! `gibtool`: cycles, complete systems, completeness and surveys for
//! Gibonacci and Tribonacci sequences mod m.
//!
//! Exit codes: 0 success, 1 verification failure or I/O error, 2 seed not
//! coprime, 3 bad arguments, 4 resource budget exceeded, 5 completeness
//! prediction contradicted by observation.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gibonacci::completeness::completeness_within;
use gibonacci::cycle::format_residues;
use gibonacci::survey::{export, run_survey_with, ExportFormat, SurveyOptions, SurveyReport};
use gibonacci::{
    classify, complete_system_within, extract_cycle, gibonacci_invariant, period_within,
    predicted_complete, terms_one_period, verify, Error, Modulus, Order, Seed,
    DEFAULT_ITERATION_BUDGET, DEFAULT_STATE_BUDGET,
};

const STATE_BUDGET_VAR: &str = "GIBTOOL_STATE_BUDGET";

#[derive(Parser)]
#[command(name = "gibtool", version, about = "Gibonacci and Tribonacci sequences modulo m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cycle of a sequence mod m, rotated to start at its least term.
    Cycle {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, short)]
        modulus: u64,
        /// Print one period from the seed instead of the canonical rotation.
        #[arg(long)]
        raw: bool,
    },
    /// Print every inequivalent cycle mod m.
    System {
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, short)]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = SystemFormat::Text)]
        format: SystemFormat,
    },
    /// Does the sequence hit every residue mod m?
    Complete {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, short)]
        modulus: u64,
    },
    /// M_F or M_L, from the invariant a^2 + ab - b^2.
    Classify {
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// Predicted completeness from the classification next to the observed one.
    Member {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, short)]
        modulus: u64,
    },
    /// Completeness over the first n primes.
    Survey {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,1,1")]
        seed: Vec<i64>,
        #[arg(long, default_value_t = 300)]
        primes: usize,
        #[arg(long, default_value_t = NonZeroUsize::new(20).unwrap())]
        bucket: NonZeroUsize,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Table)]
        format: SurveyFormat,
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
        /// Worker threads; defaults to every available core.
        #[arg(long)]
        jobs: Option<NonZeroUsize>,
    },
    /// Recompute the published results and report each check.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        /// List the checks without running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct SeedArgs {
    /// Recurrence order; must match the number of seed terms when given.
    #[arg(long)]
    order: Option<usize>,
    /// Initial terms, e.g. `1,3` or `1,1,2`.
    #[arg(long, short, required = true, value_delimiter = ',', allow_hyphen_values = true)]
    seed: Vec<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurveyFormat {
    Table,
    Csv,
    Json,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Verify,
    Disagreement,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonCoprimeSeed { .. } => 2,
        Error::ResourceLimit { .. } => 4,
        Error::TheoremViolated(_) => 5,
        Error::Io(_) => 1,
        _ => 3,
    }
}

fn parse_seed(args: &SeedArgs) -> Result<Seed, Failure> {
    let arity = args.seed.len();
    Order::from_arity(arity)?;
    if let Some(order) = args.order {
        if order != arity {
            return Err(Failure::Usage(format!(
                "--order {order} does not match {arity} seed terms"
            )));
        }
    }
    Ok(Seed::new(&args.seed)?)
}

fn state_budget() -> Result<u64, Failure> {
    match std::env::var(STATE_BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{STATE_BUDGET_VAR}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_STATE_BUDGET),
    }
}

fn cmd_cycle(out: &mut impl Write, seed: &Seed, m: Modulus, raw: bool) -> Result<(), Failure> {
    period_within(seed, m, DEFAULT_ITERATION_BUDGET)?;
    if raw {
        writeln!(out, "{}", format_residues(&terms_one_period(seed, m)))?;
    } else {
        writeln!(out, "{}", extract_cycle(seed, m))?;
    }
    Ok(())
}

fn cmd_system(out: &mut impl Write, order: Order, m: Modulus, format: SystemFormat) -> Result<(), Failure> {
    let system = complete_system_within(m, order, state_budget()?)?;
    match format {
        SystemFormat::Text => {
            for c in system.cycles() {
                writeln!(out, "{c}")?;
            }
            writeln!(out, "total terms: {}", system.term_count())?;
        }
        SystemFormat::Json => {
            let cycles: Vec<&[u64]> = system.cycles().iter().map(|c| c.residues()).collect();
            let doc = serde_json::json!({
                "modulus": m.get(),
                "order": order.get(),
                "cycles": cycles,
                "term_count": system.term_count(),
            });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn cmd_complete(out: &mut impl Write, seed: &Seed, m: Modulus) -> Result<(), Failure> {
    let report = completeness_within(seed, m, DEFAULT_ITERATION_BUDGET)?;
    if report.complete {
        writeln!(out, "complete")?;
    } else {
        let missing: Vec<u64> = report.missing.iter().copied().collect();
        writeln!(out, "defective")?;
        writeln!(out, "missing: {}", format_residues(&missing))?;
    }
    writeln!(out, "cycle length: {}", report.cycle_length)?;
    Ok(())
}

fn cmd_classify(out: &mut impl Write, seed: &Seed) -> Result<(), Failure> {
    let class = classify(seed)?;
    let invariant = gibonacci_invariant(seed)?;
    writeln!(out, "{class} (invariant {})", invariant.magnitude)?;
    Ok(())
}

fn cmd_member(out: &mut impl Write, seed: &Seed, m: Modulus) -> Result<(), Failure> {
    let predicted = predicted_complete(seed, m)?;
    let observed = completeness_within(seed, m, DEFAULT_ITERATION_BUDGET)?.complete;
    writeln!(out, "class: {}", classify(seed)?)?;
    writeln!(out, "predicted: {predicted}")?;
    writeln!(out, "observed: {observed}")?;
    if predicted != observed {
        writeln!(out, "DISAGREEMENT")?;
        return Err(Failure::Disagreement);
    }
    Ok(())
}

fn cmd_survey(
    out: &mut impl Write,
    seed: Seed,
    primes: usize,
    bucket: NonZeroUsize,
    format: SurveyFormat,
    output: Option<std::path::PathBuf>,
    jobs: Option<NonZeroUsize>,
) -> Result<(), Failure> {
    let options = SurveyOptions {
        jobs,
        ..Default::default()
    };
    let records = run_survey_with(&seed, primes, &options)?;
    let report = SurveyReport::new(seed, records, bucket);
    let mut sink: Box<dyn Write + '_> = match output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(&mut *out),
    };
    match format {
        SurveyFormat::Table => {
            write!(sink, "{}", report.table)?;
            writeln!(sink, "total: {} of {} complete", report.table.total_complete, report.table.total)?;
        }
        SurveyFormat::Csv => export(&report, ExportFormat::Csv, &mut sink)?,
        SurveyFormat::Json => export(&report, ExportFormat::Json, &mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn cmd_verify(out: &mut impl Write, suite: &str, list: bool) -> Result<(), Failure> {
    let checks = verify::suite(suite).ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))?;
    if list {
        for c in checks {
            writeln!(out, "{}: {}", c.id, c.title)?;
        }
        return Ok(());
    }
    let rules = verify::MembershipRules::default();
    let mut failed = 0;
    for c in checks {
        match (c.run)(&rules) {
            Ok(()) => writeln!(out, "PASS {}: {}", c.id, c.title)?,
            Err(detail) => {
                failed += 1;
                writeln!(out, "FAIL {}: {}: {detail}", c.id, c.title)?;
            }
        }
        out.flush()?;
    }
    writeln!(out, "{} of {} checks passed", checks.len() - failed, checks.len())?;
    if failed > 0 {
        return Err(Failure::Verify);
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Cycle { seed, modulus, raw } => {
            cmd_cycle(out, &parse_seed(&seed)?, Modulus::new(modulus)?, raw)
        }
        Command::System { order, modulus, format } => {
            cmd_system(out, Order::from_arity(order)?, Modulus::new(modulus)?, format)
        }
        Command::Complete { seed, modulus } => {
            cmd_complete(out, &parse_seed(&seed)?, Modulus::new(modulus)?)
        }
        Command::Classify { seed } => cmd_classify(out, &parse_seed(&seed)?),
        Command::Member { seed, modulus } => {
            cmd_member(out, &parse_seed(&seed)?, Modulus::new(modulus)?)
        }
        Command::Survey { seed, primes, bucket, format, output, jobs } => {
            let seed = parse_seed(&SeedArgs { order: None, seed })?;
            cmd_survey(out, seed, primes, bucket, format, output, jobs)
        }
        Command::Verify { suite, list } => cmd_verify(out, &suite, list),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::LineWriter::new(stdout.lock());
    let result = dispatch(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Disagreement) => ExitCode::from(5),
    }
}
