mod commands;
mod experiment;
mod source;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use alphadom::construct::DEFAULT_SEED;
use alphadom::{Alpha, Mode};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use source::Source;

/// Alpha-domination toolkit: bounds, verification, randomized
/// constructions and exact small-graph values.
#[derive(Parser, Debug)]
#[command(name = "alphadom", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate every applicable bound for one graph and alpha.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        /// Alpha as a fraction p/q in (0, 1].
        #[arg(long)]
        alpha: Alpha,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a vertex set; exits 0 when valid and 2 when not.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// File of whitespace-separated 0-based vertex indices.
        #[arg(long)]
        set: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build an alpha-dominating or alpha-rate dominating set at random.
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = ConstructMode::Alpha)]
        mode: ConstructMode,
        #[arg(long)]
        alpha: Alpha,
        /// Independent trials; the smallest set wins.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Formula used to choose the selection probability.
        #[arg(long, value_enum, default_value_t = PRuleArg::Thm)]
        p_rule: PRuleArg,
        /// Fixed selection probability, overriding --p-rule.
        #[arg(long)]
        p: Option<f64>,
        /// Deterministic conditional-expectation version (alpha mode only).
        #[arg(long, conflicts_with_all = ["trials", "p", "greedy_repair"])]
        derandomize: bool,
        /// Repair against the growing set; verified, but not covered by the bound.
        #[arg(long)]
        greedy_repair: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact minimum set size by exhaustive search (n <= 24).
    Exact {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reproducible CSV tables.
    Experiment {
        #[arg(value_enum)]
        name: ExperimentName,
        /// Graph for alpha-sweep (defaults to the Petersen graph).
        #[command(flatten)]
        graph: OptionalGraphArgs,
        /// Seed for the random families in family-sweep.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Read an edge-list file as 1-based.
    #[arg(long, requires = "input")]
    one_based: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Graph file: DIMACS or edge list, detected from the first token.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generator spec such as cycle:5, circulant:2001:1-500, gnp:20:0.3:7.
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalGraphArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
}

#[derive(Args, Debug)]
struct ModeArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Alpha)]
    mode: ModeArg,
    /// Required for the alpha and rate modes.
    #[arg(long)]
    alpha: Option<Alpha>,
    /// Required for kdom and tuple.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Dom,
    Kdom,
    Tuple,
    Alpha,
    Rate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructMode {
    Alpha,
    Rate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PRuleArg {
    Thm,
    Cor,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExperimentName {
    PaperExample,
    AlphaSweep,
    FamilySweep,
}

impl GraphArgs {
    fn load(&self) -> Result<Source> {
        match (&self.source.input, &self.source.generator) {
            (Some(path), _) => source::load_file(path, self.one_based),
            (_, Some(spec)) => source::generate(spec),
            _ => unreachable!("clap enforces one graph source"),
        }
    }
}

impl OptionalGraphArgs {
    fn load(&self) -> Result<Option<Source>> {
        match (&self.input, &self.generator) {
            (Some(path), _) => source::load_file(path, false).map(Some),
            (_, Some(spec)) => source::generate(spec).map(Some),
            _ => Ok(None),
        }
    }
}

impl ModeArgs {
    fn resolve(&self) -> Result<Mode> {
        let alpha = || self.alpha.context("--alpha is required for this mode");
        let k = || match self.k {
            Some(0) => bail!("--k must be at least 1"),
            Some(k) => Ok(k),
            None => bail!("--k is required for this mode"),
        };
        Ok(match self.mode {
            ModeArg::Dom => Mode::Dom,
            ModeArg::Kdom => Mode::KDom(k()?),
            ModeArg::Tuple => Mode::KTuple(k()?),
            ModeArg::Alpha => Mode::Alpha(alpha()?),
            ModeArg::Rate => Mode::AlphaRate(alpha()?),
        })
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Bounds {
            graph,
            alpha,
            output,
        } => {
            let src = graph.load()?;
            emit(
                output.out.as_ref(),
                &commands::bounds(&src, alpha, output.format)?,
            )?;
            Ok(0)
        }
        Command::Verify {
            graph,
            set,
            mode,
            output,
        } => {
            let src = graph.load()?;
            let mode = mode.resolve()?;
            let (text, valid) = commands::verify(&src, &set, mode, output.format)?;
            emit(output.out.as_ref(), &text)?;
            Ok(if valid { 0 } else { 2 })
        }
        Command::Construct {
            graph,
            mode,
            alpha,
            trials,
            seed,
            p_rule,
            p,
            derandomize,
            greedy_repair,
            output,
        } => {
            let src = graph.load()?;
            let req = commands::ConstructRequest {
                mode,
                alpha,
                trials,
                seed,
                p_rule,
                p,
                derandomize,
                greedy_repair,
            };
            emit(
                output.out.as_ref(),
                &commands::construct(&src, &req, output.format)?,
            )?;
            Ok(0)
        }
        Command::Exact {
            graph,
            mode,
            output,
        } => {
            let src = graph.load()?;
            let mode = mode.resolve()?;
            emit(
                output.out.as_ref(),
                &commands::exact(&src, mode, output.format)?,
            )?;
            Ok(0)
        }
        Command::Experiment {
            name,
            graph,
            seed,
            out,
        } => {
            let src = graph.load()?;
            emit(out.as_ref(), &experiment::run(name, src, seed)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
