mod input;
mod output;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lctpoly::geom::{hausdorff_sq, HPolyhedron, LpOutcome};
use lctpoly::lct::lct_threshold;
use lctpoly::sequence::{detect_stationary_limit, ex11_family, truncation_family};
use lctpoly::verify::{run_suite, Suite};
use lctpoly::{Error, RatVec, Rational};
use serde_json::{json, Value};

use input::Input;

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn context(self, what: &str) -> Self {
        CliError {
            message: format!("{what}: {}", self.message),
            ..self
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ImproperIdeal => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "lctpoly",
    version,
    about = "Exact LCT-polytopes of monomial ideals and resolution data"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    output: OutputFormat,
    /// Append decimal approximations, marked as such, to exact values.
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Terms LCT(a_1 + m^q, ..., a_r + m^q) for q = 1, 2, ...
    Truncate,
    /// Terms LCT of the tuple with (y^d) added in one position, d = 1, 2, ...
    Ex11,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Prop1,
    Order,
    Cor2,
    Ex11,
    Oracle,
    Truncate,
    Geometry,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Prop1 => Suite::Prop1,
            SuiteArg::Order => Suite::Order,
            SuiteArg::Cor2 => Suite::Cor2,
            SuiteArg::Ex11 => Suite::Ex11,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Truncate => Suite::Truncation,
            SuiteArg::Geometry => Suite::Geometry,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical H- and V-description of the LCT-polytope.
    Compute { input: PathBuf },
    /// Print the log canonical threshold of one ideal.
    Lct {
        input: PathBuf,
        /// Which ideal of a tuple (0-based); required for tuples.
        #[arg(long)]
        coordinate: Option<usize>,
    },
    /// Print the squared Hausdorff distance between two LCT-polytopes.
    Distance { a: PathBuf, b: PathBuf },
    /// Analyze a finite prefix of a sequence of LCT-polytopes.
    Sequence {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Number of terms to compute.
        #[arg(long)]
        prefix: usize,
        /// Number of trailing equal terms that counts as stationary.
        #[arg(long, default_value_t = 5)]
        window: usize,
        /// Position of the ideal that receives (y^d) in ex11 mode (0-based).
        #[arg(long, default_value_t = 0)]
        axis: usize,
    },
    /// Run a seeded randomized property suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

/// What a command produced: its rendering and whether it counts as success.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn render(
    cli: &Cli,
    json: Value,
    text: impl FnOnce() -> Result<String, CliError>,
) -> Result<String, CliError> {
    match cli.output {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&json).expect("serializable") + "\n"),
        OutputFormat::Text => text(),
    }
}

fn compute(cli: &Cli, path: &Path) -> Result<Outcome, CliError> {
    let (h, provenance) = Input::read(path)?.polytope()?;
    let json = output::polytope_json(&h, &provenance, cli.approx)?;
    render(cli, json, || {
        output::polytope_text(&h, &provenance, cli.approx)
    })
    .map(Outcome::ok)
}

/// `max λ_i` over a down-closed polytope, its intercept with axis `i`.
fn axis_extent(h: &HPolyhedron, i: usize) -> Result<Rational, CliError> {
    if i >= h.dim() {
        return Err(CliError::usage(format!(
            "coordinate {i} out of range for dimension {}",
            h.dim()
        )));
    }
    match h.maximize(&RatVec::unit(h.dim(), i))? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        _ => Err(CliError::usage("the polytope is empty or unbounded")),
    }
}

fn lct(cli: &Cli, path: &Path, coordinate: Option<usize>) -> Result<Outcome, CliError> {
    let input = Input::read(path)?;
    let value = match (&input, coordinate) {
        (Input::Ideals(ideals), Some(i)) => {
            let a = ideals
                .get(i)
                .ok_or_else(|| CliError::usage(format!("coordinate {i} out of range")))?;
            lct_threshold(a)?
        }
        (Input::Ideals(ideals), None) if ideals.len() == 1 => lct_threshold(&ideals[0])?,
        (Input::Ideals(_), None) => {
            return Err(CliError::usage(
                "several ideals given; choose one with --coordinate",
            ))
        }
        (_, coordinate) => {
            let (h, _) = input.polytope()?;
            let i = match coordinate {
                Some(i) => i,
                None if h.dim() == 1 => 0,
                None => {
                    return Err(CliError::usage(
                        "several coordinates present; choose one with --coordinate",
                    ))
                }
            };
            axis_extent(&h, i)?
        }
    };
    let json = output::rational_json("lct", &value, cli.approx);
    render(cli, json, || {
        Ok(output::rational_text(&value, cli.approx) + "\n")
    })
    .map(Outcome::ok)
}

fn distance(cli: &Cli, a: &Path, b: &Path) -> Result<Outcome, CliError> {
    let (pa, _) = Input::read(a)?.polytope()?;
    let (pb, _) = Input::read(b)?.polytope()?;
    let d = hausdorff_sq(&pa, &pb)?;
    let json = output::rational_json("sq_distance", &d, cli.approx);
    render(cli, json, || {
        Ok(output::rational_text(&d, cli.approx) + "\n")
    })
    .map(Outcome::ok)
}

fn sequence(
    cli: &Cli,
    path: &Path,
    mode: Mode,
    prefix: usize,
    window: usize,
    axis: usize,
) -> Result<Outcome, CliError> {
    let ideals = Input::read(path)?.ideals()?;
    if window == 0 || prefix < window + 1 {
        return Err(CliError::usage(format!(
            "--prefix ({prefix}) must exceed a positive --window ({window})"
        )));
    }
    let (seq, mode_name) = match mode {
        Mode::Truncate => (truncation_family(&ideals, prefix)?, "truncate"),
        Mode::Ex11 => (ex11_family(&ideals, prefix, axis)?, "ex11"),
    };
    let report = detect_stationary_limit(&seq, window)?;
    let terms = seq.terms()?;

    let term_json = terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut p = output::polytope_json(t.h(), t.provenance().tag(), cli.approx)?;
            p["index"] = json!(i + 1);
            Ok(p)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let json = json!({
        "format": 1,
        "mode": mode_name,
        "prefix": prefix,
        "window": window,
        "terms": term_json,
        "sq_distance_profile": report.sq_distance_profile.iter().map(output::exact).collect::<Vec<_>>(),
        "stationary": report.stationary,
        "m0": report.m0,
        "candidate_limit": output::polytope_json(&report.candidate_limit, "limit", cli.approx)?,
    });
    render(cli, json, || {
        let mut out = format!("{mode_name} sequence, {prefix} terms, window {window}\n");
        for (i, (t, d)) in terms.iter().zip(&report.sq_distance_profile).enumerate() {
            out.push_str(&format!(
                "term {}: {}  sq_distance {}\n",
                i + 1,
                output::polytope_inline(t.h()),
                output::rational_text(d, cli.approx)
            ));
        }
        match report.m0 {
            Some(m0) => out.push_str(&format!("stationary from term {m0}\n")),
            None => out.push_str("not stationary within the prefix\n"),
        }
        out.push_str("candidate limit:\n");
        out.push_str(&output::polytope_text(
            &report.candidate_limit,
            "limit",
            cli.approx,
        )?);
        Ok(out)
    })
    .map(Outcome::ok)
}

fn verify(cli: &Cli, suite: SuiteArg, seed: u64, count: usize) -> Result<Outcome, CliError> {
    let report = run_suite(suite.into(), seed, count);
    let json = json!({
        "format": 1,
        "suite": report.suite.name(),
        "seed": report.seed,
        "count": report.count,
        "passed": report.passed(),
        "failures": report.failures.iter().map(|f| json!({
            "instance": f.instance,
            "checks": f.checks,
            "reproducer": f.reproducer,
        })).collect::<Vec<_>>(),
    });
    let text = render(cli, json, || Ok(report.to_string()))?;
    Ok(Outcome {
        text,
        ok: report.passed(),
    })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Compute { input } => compute(cli, input),
        Command::Lct { input, coordinate } => lct(cli, input, *coordinate),
        Command::Distance { a, b } => distance(cli, a, b),
        Command::Sequence {
            input,
            mode,
            prefix,
            window,
            axis,
        } => sequence(cli, input, *mode, *prefix, *window, *axis),
        Command::Verify { suite, seed, count } => verify(cli, *suite, *seed, *count),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("lctpoly: {e}");
            ExitCode::from(e.code)
        }
    }
}
