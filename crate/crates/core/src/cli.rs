//! Command-line front end. [`run`] takes arguments and output streams so it
//! can be driven in-process; the `apolab` binary only forwards to it.
//!
//! Exit codes: 0 success, 1 a verification or bounds check failed, 2 usage,
//! validation or parse error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::check_against;
use crate::constructions::{
    compressed_hvector, power_sum_presentation, separation_pair, septic_pair, BlockFamily, PowerSumSpec,
};
use crate::document::{parse_presentation, presentation_to_json};
use crate::error::{Error, Result};
use crate::field::{PrimeField, SeededRng, DEFAULT_PRIME};
use crate::hvector::HVector;
use crate::inverse_system::LevelPresentation;
use crate::sweep::{parse_range, run_sweep, SweepConfig, DEFAULT_MAX_COLS};
use crate::verify::{run_suite_with, Hooks, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    /// JSON.
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "apolab", version, about = "Exact h-vectors and bounds for level algebras over a prime field")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Field characteristic. Defaults to the prime of the input file, else 2147483647.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Master seed for every random draw.
    #[arg(long, global = true, env = "APOLAB_SEED", default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Extra diagnostics on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// h-vector of the algebra presented by a form file.
    Hvector { input: PathBuf },
    /// Lower and upper bounds for level quotients of type c and socle degree d.
    Bounds {
        /// Comma-separated h-vector, e.g. 1,4,9,13.
        #[arg(long)]
        h: HVector,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: usize,
    },
    /// h-vector of a generic level quotient, checked against the bounds.
    Quotient {
        input: PathBuf,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        c: usize,
    },
    /// Basis of the degree-d derivatives, as a form file.
    Truncate {
        input: PathBuf,
        #[arg(long)]
        d: u32,
    },
    /// Build a named presentation.
    #[command(subcommand)]
    Construct(Construct),
    /// Run a reference suite and print expected against computed values.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Randomized audit of the bounds, written as CSV.
    Sweep {
        /// Number of variables, `a-b` or `a`.
        #[arg(long, default_value = "1-4")]
        r: String,
        /// Socle degree of the ambient algebra.
        #[arg(long, default_value = "1-6")]
        e: String,
        /// Type of the ambient algebra.
        #[arg(long, default_value = "1-3")]
        t: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Skip instances with more top-degree monomials than this.
        #[arg(long, default_value_t = DEFAULT_MAX_COLS)]
        max_cols: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Shared-block family of type t in (t+1)p variables.
    Remark5 {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        e: u32,
    },
    /// One generator per entry of --summands, each a sum of that many generic e-th powers.
    Powersum {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        e: u32,
        /// Comma-separated summand counts.
        #[arg(long, value_delimiter = ',', required = true)]
        summands: Vec<usize>,
    },
    /// Two generic ternary septics, or the quotient by one partial of each.
    Septics {
        #[arg(long)]
        quotient: bool,
    },
    /// Two presentations with equal h-vectors but different generic quotients.
    Remark6 {
        #[arg(long, value_enum, default_value_t = Which::A1)]
        which: Which,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 4)]
        e: u32,
    },
    /// h-vector of a generic (compressed) algebra of type t.
    CompressedH {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    A1,
    A2,
    /// Gorenstein quotient of a2 by its long power sum.
    Designated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Example4,
    Remark5,
    Remark6,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Example4 => Suite::Example4,
            SuiteArg::Remark5 => Suite::Remark5,
            SuiteArg::Remark6 => Suite::Remark6,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// `None` means: take the prime from the input, else the default.
    pub prime: Option<u64>,
    pub seed: u64,
    pub format: OutputFormat,
    pub verbosity: u8,
}

impl RunConfig {
    fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime.unwrap_or(DEFAULT_PRIME))
    }
}

/// Output of one subcommand before it is written.
struct Outcome {
    body: String,
    code: i32,
    /// Printed to stderr (or stdout when the body went to a file).
    summary: Option<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            code: EXIT_OK,
            summary: None,
        }
    }
}

pub fn run_from_env() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_hooks(args, out, err, &Hooks::default())
}

/// [`run`] with replaceable verification pieces.
pub fn run_with_hooks<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, hooks: &Hooks) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let cfg = RunConfig {
        prime: cli.global.prime,
        seed: cli.global.seed,
        format: cli.global.format,
        verbosity: cli.global.verbose,
    };
    if cfg.verbosity > 0 {
        let _ = writeln!(err, "seed {} prime {}", cfg.seed, cfg.prime.map_or("from input".into(), |p| p.to_string()));
    }
    let outcome = match dispatch(&cli.command, &cfg, hooks, err) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let mut body = outcome.body;
    if !body.is_empty() && !body.ends_with('\n') {
        body.push('\n');
    }
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => out.write_all(body.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_ERROR;
    }
    if let Some(summary) = outcome.summary {
        let sink: &mut dyn Write = if cli.global.out.is_some() { out } else { err };
        let _ = writeln!(sink, "{summary}");
    }
    outcome.code
}

fn dispatch(cmd: &Command, cfg: &RunConfig, hooks: &Hooks, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Hvector { input } => cmd_hvector(input, cfg),
        Command::Bounds { h, d, c } => cmd_bounds(h, *d, *c, cfg, hooks),
        Command::Quotient { input, d, c } => cmd_quotient(input, *d, *c, cfg, hooks),
        Command::Truncate { input, d } => {
            let p = load(input, cfg)?;
            Ok(Outcome::ok(presentation_to_json(&p.truncation(*d)?)))
        }
        Command::Construct(c) => cmd_construct(c, cfg),
        Command::Verify { suite } => cmd_verify((*suite).into(), cfg, hooks),
        Command::Sweep {
            r,
            e,
            t,
            trials,
            max_cols,
        } => {
            let sweep = SweepConfig {
                field: cfg.field()?,
                num_vars: parse_range(r)?,
                socle_degrees: parse_range(e)?,
                types: parse_range(t)?,
                trials: *trials,
                seed: cfg.seed,
                max_cols: *max_cols,
            };
            cmd_sweep(&sweep, cfg, err)
        }
    }
}

/// Reads a presentation. An explicit `--prime` must agree with the file.
fn load(path: &Path, cfg: &RunConfig) -> Result<LevelPresentation> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let p = parse_presentation(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })?;
    if let Some(prime) = cfg.prime {
        let found = p.field().modulus();
        if found != prime {
            return Err(Error::FieldMismatch { expected: prime, found });
        }
    }
    Ok(p)
}

fn structured(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize")
}

fn cmd_hvector(input: &Path, cfg: &RunConfig) -> Result<Outcome> {
    let p = load(input, cfg)?;
    let spaces = p.derivative_spaces()?;
    let h = HVector::new(spaces.iter().map(|s| s.rank()).collect())?;
    let body = match cfg.format {
        OutputFormat::Text => format!(
            "h-vector: {h}\ntype: {}\nsocle degree: {}\nvariables: {}",
            p.type_count(),
            p.socle_degree(),
            p.num_vars()
        ),
        OutputFormat::Structured => structured(json!({
            "h": h,
            "type": p.type_count(),
            "socle_degree": p.socle_degree(),
            "num_vars": p.num_vars(),
            "prime": p.field().modulus(),
            "ranks": spaces.iter().map(|s| json!({"degree": s.degree(), "rank": s.rank()})).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::ok(body))
}

fn cmd_bounds(h: &HVector, d: usize, c: usize, cfg: &RunConfig, hooks: &Hooks) -> Result<Outcome> {
    let report = (hooks.bounds)(h, d, c)?;
    let body = match cfg.format {
        OutputFormat::Text => report.to_string(),
        OutputFormat::Structured => structured(json!({
            "h": report.h,
            "d": d,
            "c": c,
            "lower_exact": std::iter::once("1".to_string())
                .chain(report.lower_exact.iter().map(|v| v.to_string()))
                .collect::<Vec<_>>(),
            "lower": report.lower_vector(),
            "upper": report.upper_vector(),
            "degenerate_case": report.degenerate_case,
        })),
    };
    Ok(Outcome::ok(body))
}

fn cmd_quotient(input: &Path, d: u32, c: usize, cfg: &RunConfig, hooks: &Hooks) -> Result<Outcome> {
    let p = load(input, cfg)?;
    let h = p.hvector()?;
    let mut rng = SeededRng::new(cfg.seed);
    let big_h = p.generic_quotient(d, c, &mut rng)?.hvector()?;
    let report = (hooks.bounds)(&h, d as usize, c)?;
    let verdict = check_against(&big_h, &report);
    let failing = verdict.failing_indices();
    let body = match cfg.format {
        OutputFormat::Text => {
            let mut s = format!(
                "ambient h: {h}\nquotient H: {big_h}\nlower: {}\nupper: {}\nwithin bounds: {}",
                crate::hvector::join(&report.lower_vector(), ","),
                crate::hvector::join(&report.upper_vector(), ","),
                verdict.pass
            );
            if let Some(v) = verdict.first_failure() {
                s.push_str(&format!(
                    "\nfirst failing index {}: {} outside [{}, {}]",
                    v.index, v.value, v.lower, v.upper
                ));
            }
            s
        }
        OutputFormat::Structured => structured(json!({
            "ambient_h": h,
            "quotient_h": big_h,
            "d": d,
            "c": c,
            "seed": cfg.seed,
            "lower": report.lower_vector(),
            "upper": report.upper_vector(),
            "within": verdict.pass,
            "failing_indices": failing,
        })),
    };
    Ok(Outcome {
        body,
        code: if verdict.pass { EXIT_OK } else { EXIT_FAILED },
        summary: None,
    })
}

fn cmd_construct(c: &Construct, cfg: &RunConfig) -> Result<Outcome> {
    let field = cfg.field()?;
    let mut rng = SeededRng::new(cfg.seed);
    let p = match c {
        Construct::Remark5 { t, p, e } => BlockFamily::new(*t, *p, *e)?.presentation(field)?,
        Construct::Powersum { r, e, summands } => {
            power_sum_presentation(field, &PowerSumSpec::generic(*r, *e, summands), &mut rng)?
        }
        Construct::Septics { quotient } => {
            let pair = septic_pair(field, &mut rng)?;
            if *quotient {
                pair.quotient
            } else {
                pair.ambient
            }
        }
        Construct::Remark6 { which, t, p, e } => {
            let pair = separation_pair(field, *t, *p, *e, &mut rng)?;
            match which {
                Which::A1 => pair.a1,
                Which::A2 => pair.a2,
                Which::Designated => pair.designated_quotient()?,
            }
        }
        Construct::CompressedH { r, e, t } => {
            let h = compressed_hvector(*r, *e, *t)?;
            let body = match cfg.format {
                OutputFormat::Text => h.to_string(),
                OutputFormat::Structured => structured(json!({ "h": h })),
            };
            return Ok(Outcome::ok(body));
        }
    };
    Ok(Outcome::ok(presentation_to_json(&p)))
}

fn cmd_verify(suite: Suite, cfg: &RunConfig, hooks: &Hooks) -> Result<Outcome> {
    let report = run_suite_with(suite, cfg.field()?, cfg.seed, hooks)?;
    let body = match cfg.format {
        OutputFormat::Text => report.to_string(),
        OutputFormat::Structured => structured(json!({ "pass": report.pass(), "checks": report.checks })),
    };
    let summary = report.first_failure().map(|f| {
        format!(
            "verification failed: {}: {}",
            f.name,
            f.detail.as_deref().unwrap_or("mismatch")
        )
    });
    Ok(Outcome {
        body,
        code: if report.pass() { EXIT_OK } else { EXIT_FAILED },
        summary,
    })
}

fn cmd_sweep(sweep: &SweepConfig, cfg: &RunConfig, err: &mut dyn Write) -> Result<Outcome> {
    let outcome = run_sweep(sweep)?;
    for why in &outcome.skipped {
        let _ = writeln!(err, "skipped {why}");
    }
    let summary = outcome.summary();
    if cfg.verbosity > 0 {
        for v in outcome.violations() {
            let _ = writeln!(err, "violation r={} e={} t={} d={} c={} seed={}", v.r, v.e, v.t, v.d, v.c, v.seed);
        }
    }
    let body = match cfg.format {
        OutputFormat::Text => outcome.to_csv(),
        OutputFormat::Structured => structured(json!({ "summary": summary, "records": outcome.records })),
    };
    Ok(Outcome {
        body,
        code: if summary.violations == 0 { EXIT_OK } else { EXIT_FAILED },
        summary: Some(summary.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("apolab").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bounds_text() {
        let (code, out, _) = call(&["bounds", "--h", "1,4,9,13,13,13,9,6,4", "--d", "6", "--c", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("lower = 1,3,4,6,5,5,3"), "{out}");
        assert!(out.contains("upper = 1,4,9,13,13,12,3"), "{out}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["bounds", "--h", "1,2,1", "--d", "2", "--c", "2"]).0, 2);
        assert_eq!(call(&["bounds", "--h", "0,2,1", "--d", "2", "--c", "1"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["--prime", "10", "verify", "--suite", "example4"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
