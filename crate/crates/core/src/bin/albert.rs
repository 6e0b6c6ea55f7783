use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use albert::commands::{self, CommandOutput, EXIT_MALFORMED};
use albert::diagonalize::Tolerances;
use albert::octonion::Algebra;

#[derive(Parser)]
#[command(name = "albert", version, about = "Diagonalize elements of the exceptional Jordan algebra by explicit F4 generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input JSON file
    #[arg(long)]
    input: PathBuf,
    /// Write JSON here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonalize a compact element and emit the generator transcript
    Diagonalize {
        #[command(flatten)]
        io: Io,
        /// Threshold below which an entry counts as zero [default: 1e-10]
        #[arg(long)]
        zero_tol: Option<f64>,
        /// Largest accepted off-diagonal residual [default: 1e-9]
        #[arg(long)]
        residual_tol: Option<f64>,
    },
    /// Replay a transcript and check its residual, diagonal and invariants
    Verify {
        #[command(flatten)]
        io: Io,
    },
    /// Print trace, (X,X), sigma and det of an element
    Invariants {
        #[command(flatten)]
        io: Io,
    },
    /// Emit a reproducible random element (SplitMix64, entries in [-1, 1))
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Compact)]
        algebra: AlgebraArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a split element for the negative inner-product obstruction
    SplitCheck {
        #[command(flatten)]
        io: Io,
    },
    /// Run the built-in invariant suites
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Compact,
    Split,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Compact => Algebra::Compact,
            AlgebraArg::Split => Algebra::Split,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CommandOutput> {
    std::fs::read_to_string(path).map_err(|e| CommandOutput {
        json: String::new(),
        code: EXIT_MALFORMED,
        diagnostic: Some(format!("cannot read {}: {e}", path.display())),
    })
}

fn run(cli: Cli) -> (CommandOutput, Option<PathBuf>) {
    let with_input = |io: Io, f: &dyn Fn(&str) -> CommandOutput| match read(&io.input) {
        Ok(text) => (f(&text), io.output),
        Err(out) => (out, None),
    };
    match cli.command {
        Command::Diagonalize {
            io,
            zero_tol,
            residual_tol,
        } => {
            let mut tol = Tolerances::default();
            if let Some(z) = zero_tol {
                tol.zero_tol = z;
            }
            if let Some(r) = residual_tol {
                tol.residual_tol = r;
            }
            with_input(io, &|t| commands::diagonalize_cmd(t, &tol))
        }
        Command::Verify { io } => with_input(io, &commands::verify_cmd),
        Command::Invariants { io } => with_input(io, &commands::invariants_cmd),
        Command::SplitCheck { io } => with_input(io, &commands::split_check_cmd),
        Command::Random {
            seed,
            algebra,
            output,
        } => (commands::random_cmd(seed, algebra.into()), output),
        Command::Selftest { seed } => (commands::selftest_cmd(seed), None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_MALFORMED as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (out, output_path) = run(cli);
    if let Some(msg) = &out.diagnostic {
        eprintln!("albert: {msg}");
    }
    if !out.json.is_empty() {
        match output_path {
            Some(p) => {
                if let Err(e) = std::fs::write(&p, &out.json) {
                    eprintln!("albert: cannot write {}: {e}", p.display());
                    return ExitCode::from(EXIT_MALFORMED as u8);
                }
            }
            None => print!("{}", out.json),
        }
    }
    ExitCode::from(out.code as u8)
}
