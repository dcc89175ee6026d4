//! The `qfrob` command line. [`execute`] parses arguments and writes to the
//! given streams, so the binary and the tests share one code path.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use crate::expr::{self, Element};
use crate::fixture::{load_form, load_surface};
use crate::suites::{self, specialize, surface, Check, RunConfig, Suite};
use crate::{json, FixtureError, Report};
use qfrob_core::oqsl2::{trace_over_center_fraction, trace_over_frobenius_fraction};
use qfrob_core::qtorus::{central_lattice, trace_over_center, trace_over_frobenius, Torus};
use qfrob_core::scalars::RootData;
use serde_json::json;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_FIXTURE: u8 = 2;

#[derive(Parser)]
#[command(name = "qfrob", version, about = "Exact checks of trace pairings at odd roots of unity")]
struct Cli {
    /// Order N of the root of unity (odd, at least 3).
    #[arg(long, global = true)]
    n: Option<u32>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Also run exploratory checks (never affect the exit code).
    #[arg(long, global = true)]
    exploratory: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Skew-form fixture(s) for the torus suite.
        #[arg(long)]
        form: Vec<String>,
        /// Surface fixture with a form for the subgroup checks.
        #[arg(long)]
        surface: Option<String>,
        /// SL_2 point fixture(s) for the specialization suite.
        #[arg(long)]
        rho: Vec<String>,
    },
    /// Specialize O_q(SL_2) at one point and certify its trace pairing.
    Specialize {
        #[arg(long)]
        rho: String,
    },
    /// Trace of an element over the Frobenius image or the center.
    Trace {
        #[arg(long)]
        element: String,
        #[arg(long, value_enum)]
        over: Over,
        /// Skew form for torus expressions (default: rank2).
        #[arg(long)]
        form: Option<String>,
    },
    /// Surface invariants.
    Surface {
        #[command(subcommand)]
        command: SurfaceCommand,
    },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// Print r, |generators|, Lambda and the expected dimensions.
    Info {
        #[arg(long)]
        fixture: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Over {
    Frobenius,
    Center,
}

enum Failure {
    Fixture(String),
    Checks,
}

impl From<FixtureError> for Failure {
    fn from(e: FixtureError) -> Self {
        Failure::Fixture(e.to_string())
    }
}

struct Streams<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

fn emit(cli: &Cli, io: &mut Streams, text: &str) -> Result<(), Failure> {
    match &cli.report {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Fixture(format!("cannot write {}: {e}", path.display()))),
        None => writeln!(io.out, "{text}").map_err(|e| Failure::Fixture(format!("cannot write output: {e}"))),
    }
}

fn finish(cli: &Cli, io: &mut Streams, report: Report) -> Result<(), Failure> {
    let _ = write!(io.err, "{}", report.summary());
    emit(cli, io, &report.to_json())?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn root(n: u32) -> Result<std::sync::Arc<RootData>, Failure> {
    RootData::new(n).map_err(|e| Failure::Fixture(format!("--n: {e}")))
}

fn run(cli: &Cli, io: &mut Streams) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify {
            suite,
            form,
            surface,
            rho,
        } => {
            let cfg = RunConfig {
                n: cli.n,
                seed: cli.seed,
                exploratory: cli.exploratory,
                forms: form.clone(),
                surface: surface.clone(),
                points: rho.clone(),
            };
            finish(cli, io, suites::run_suite(*suite, &cfg)?)
        }
        Command::Specialize { rho } => {
            let n = cli.n.unwrap_or(3);
            let r = root(n)?;
            let points = specialize::load_points(std::slice::from_ref(rho), &r)?;
            let (label, point) = points[0].clone();
            let checks: Vec<Check> = if point.in_w() {
                if !cli.exploratory {
                    return Err(Failure::Fixture(format!(
                        "{rho}: point lies in W (a and d both vanish); pass --exploratory to measure it anyway"
                    )));
                }
                vec![Check::exploratory(
                    "specialize.w_point",
                    "the quotient at a point where a and d both vanish",
                    move || specialize::w_point(&label, &point),
                )]
            } else {
                vec![specialize::point_check(n, cli.seed, points)]
            };
            finish(
                cli,
                io,
                Report {
                    suite: "specialize".into(),
                    n: Some(n),
                    seed: cli.seed,
                    checks: suites::run_checks(&checks),
                },
            )
        }
        Command::Trace { element, over, form } => {
            let n = cli.n.unwrap_or(3);
            let r = root(n)?;
            let parsed = expr::parse(element).map_err(|e| Failure::Fixture(format!("--element: {e}")))?;
            let form = load_form(form.as_deref().unwrap_or("rank2"))?;
            let value = parsed
                .evaluate(&r, || Torus::new(form, r.clone(), parsed.punctures()))
                .map_err(|e| Failure::Fixture(format!("--element: {e}")))?;
            let (input, trace) = match (&value, over) {
                (Element::Bigon(x), Over::Frobenius) => (json::oq(x), trace_over_frobenius_fraction(x)),
                (Element::Bigon(x), Over::Center) => (json::oq(x), trace_over_center_fraction(x)),
                (Element::Torus(t), Over::Frobenius) => (json::torus(t), trace_over_frobenius(t)),
                (Element::Torus(t), Over::Center) => {
                    let l = central_lattice(t.torus().form(), n);
                    let tr = trace_over_center(t, &l).map_err(|e| Failure::Fixture(e.to_string()))?;
                    (json::torus(t), tr)
                }
            };
            let over = match over {
                Over::Frobenius => "frobenius",
                Over::Center => "center",
            };
            let out = json!({
                "n": n,
                "over": over,
                "element": input,
                "trace": json::torus(&trace),
                "display": trace.to_string(),
            });
            emit(cli, io, &serde_json::to_string_pretty(&out).expect("json"))
        }
        Command::Surface {
            command: SurfaceCommand::Info { fixture },
        } => {
            let n = cli.n.unwrap_or(3);
            root(n)?;
            let f = load_surface(fixture)?;
            emit(cli, io, &serde_json::to_string_pretty(&surface::info(&f, n)).expect("json"))
        }
    }
}

/// Runs the command line on `args` (program name first) and returns the
/// process exit code.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return u8::try_from(e.exit_code()).unwrap_or(EXIT_FIXTURE);
        }
    };
    let mut io = Streams { out, err };
    match run(&cli, &mut io) {
        Ok(()) => 0,
        Err(Failure::Checks) => EXIT_CHECK_FAILED,
        Err(Failure::Fixture(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_FIXTURE
        }
    }
}
