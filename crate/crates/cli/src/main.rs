mod commands;
mod error;
mod model_args;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{CliError, Exit};
use model_args::ModelArgs;
use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "rschemes",
    version,
    about = "Real schemes of curves on real algebraic surfaces and their congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the congruence filters on one scheme.
    Check(CheckArgs),
    /// List every scheme of a given number of ovals.
    Enumerate(EnumerateArgs),
    /// Enumerate, filter and tabulate the schemes of a model.
    Classify(ClassifyArgs),
    /// Brown invariant of a Z4 quadratic form.
    Brown(BrownArgs),
    /// Index function and its Euler-characteristic integral.
    Integral(IntegralArgs),
    /// Region decomposition and checkerboard coloring of a scheme.
    Regions(RegionsArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub scheme: String,
    /// `M`, `M-1`, `M-2`, `typeI` or `auto`.
    #[arg(long, default_value = "auto")]
    pub class: String,
    /// Comma-separated filter names; the model's default set when omitted.
    #[arg(long)]
    pub filters: Option<String>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub ovals: usize,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// `M` for M-curves only, `auto` for every deficiency.
    #[arg(long, default_value = "auto")]
    pub class: String,
    /// Largest deficiency to enumerate.
    #[arg(long, conflicts_with = "ovals")]
    pub jmax: Option<u32>,
    /// Enumerate exactly this many ovals.
    #[arg(long)]
    pub ovals: Option<usize>,
    #[arg(long)]
    pub filters: Option<String>,
    /// Compare the output with a stored file; exit 1 on drift.
    #[arg(long)]
    pub golden: Option<std::path::PathBuf>,
    /// Print counts and the reference comparison instead of the rows.
    #[arg(long)]
    pub summary: bool,
    /// Maximal number of forests for the (5, 5) M-curve run.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct BrownArgs {
    /// Form as JSON: `{"dim": n, "pairing": [[..]], "values": [..]}`.
    #[arg(long, conflicts_with = "file")]
    pub form: Option<String>,
    /// Read the form from a file.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntegralArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub scheme: String,
    /// `Z`, `Z2`, `Z4` or `Z8`.
    #[arg(long, default_value = "Z")]
    pub ring: String,
    /// Base region of the index function.
    #[arg(long)]
    pub base: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RegionsArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub scheme: String,
}

fn run(cli: &Cli) -> Result<(String, Exit), CliError> {
    match &cli.command {
        Command::Check(a) => commands::check(a, cli.format),
        Command::Enumerate(a) => commands::enumerate(a, cli.format),
        Command::Classify(a) => commands::classify(a, cli.format),
        Command::Brown(a) => commands::brown(a, cli.format),
        Command::Integral(a) => commands::integral(a, cli.format),
        Command::Regions(a) => commands::regions(a, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::input("usage", e.kind().to_string());
            eprint!("{e}");
            println!("{}", serde_json::to_string(&err).expect("errors serialize"));
            return ExitCode::from(Exit::Input as u8);
        }
    };
    let (text, exit) = match run(&cli) {
        Ok(done) => done,
        Err(err) => (format!("{}\n", serde_json::to_string(&err).expect("errors serialize")), err.exit),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(Exit::Io as u8);
    }
    ExitCode::from(exit as u8)
}
