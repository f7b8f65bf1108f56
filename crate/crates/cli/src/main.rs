use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coxeter_boundary_cli::commands::{self, EXIT_USAGE};
use coxeter_boundary_cli::{Mode, Output, SimulateArgs};

/// Coxeter systems, their boundaries and whether the boundary action is
/// scrambled.
#[derive(Parser)]
#[command(name = "coxbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure report and scrambled-set verdict.
    ///
    /// Exit status: 0 scrambled, 1 not scrambled, 2 unknown or boundary too
    /// small, 64 on a malformed file.
    Analyze { path: PathBuf },
    /// Canonical reduced word and its length.
    Reduce { path: PathBuf, word: String },
    /// Right descent set of a word.
    Descent { path: PathBuf, word: String },
    /// Boundary-action experiments on two named rays; writes a `k,distance` CSV.
    Simulate {
        path: PathBuf,
        ray_a: String,
        ray_b: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Liminf)]
        mode: ModeArg,
        /// Number of ray vertices compared [default: 32 for liminf, 16 otherwise].
        #[arg(long)]
        depth: Option<usize>,
        /// Ball radius for limsup/obstruction [default: 6].
        #[arg(long = "L")]
        radius: Option<usize>,
        /// Largest k for liminf [default: 40].
        #[arg(long)]
        kmax: Option<usize>,
        /// Generator s0 for liminf.
        #[arg(long)]
        s0: Option<String>,
        /// Generator t0 with m(s0, t0) = inf for liminf.
        #[arg(long)]
        t0: Option<String>,
        /// The element x of g_k = (s0 t0)^k x^-1 [default: derived from the rays].
        #[arg(long)]
        x: Option<String>,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounded check of the contraction condition with a witness table.
    Check71 {
        path: PathBuf,
        #[arg(long)]
        s0: String,
        #[arg(long)]
        t0: String,
        #[arg(long = "K")]
        k: usize,
        #[arg(long = "L")]
        l: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Liminf,
    Limsup,
    Obstruction,
}

fn run(command: Command) -> Result<Output, commands::CliError> {
    match command {
        Command::Analyze { path } => commands::analyze(&path),
        Command::Reduce { path, word } => commands::reduce(&path, &word),
        Command::Descent { path, word } => commands::descent(&path, &word),
        Command::Simulate {
            path,
            ray_a,
            ray_b,
            mode,
            depth,
            radius,
            kmax,
            s0,
            t0,
            x,
            out,
        } => commands::simulate(&SimulateArgs {
            path,
            ray_a,
            ray_b,
            mode: match mode {
                ModeArg::Liminf => Mode::Liminf,
                ModeArg::Limsup => Mode::Limsup,
                ModeArg::Obstruction => Mode::Obstruction,
            },
            depth,
            radius,
            k_max: kmax,
            s0,
            t0,
            x,
            out,
        }),
        Command::Check71 { path, s0, t0, k, l } => commands::check71(&path, &s0, &t0, k, l),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
