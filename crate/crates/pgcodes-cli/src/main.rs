use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pgcodes::verify::{Mode, DEFAULT_SAMPLES, DEFAULT_SEED};
use pgcodes_cli::commands::{cmd_construct, cmd_formulas, cmd_verify};
use pgcodes_cli::{Check, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "pgcodes", version, about = "Construct and verify constant-dimension subspace codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Prop32,
    Even,
    Odd,
    Pg7,
}

impl Construction {
    fn name(self) -> &'static str {
        match self {
            Construction::Prop32 => "prop32",
            Construction::Even => "even",
            Construction::Odd => "odd",
            Construction::Pg7 => "pg7",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Distance,
    Cover,
    Cardinality,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it in SCODE v1 format.
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        construction: Construction,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a code file; exits 0 if every check passes, 1 otherwise.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "distance,cover,cardinality")]
        checks: Vec<CheckArg>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
    },
    /// Print every census value for (q, n).
    Formulas {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Construct { q, n, construction, out: path } => cmd_construct(q, n, construction.name(), &path, &mut out),
        Command::Verify {
            input,
            checks,
            mode,
            seed,
            samples,
        } => {
            let checks: Vec<Check> = checks
                .into_iter()
                .map(|c| match c {
                    CheckArg::Distance => Check::Distance,
                    CheckArg::Cover => Check::Cover,
                    CheckArg::Cardinality => Check::Cardinality,
                })
                .collect();
            let mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sampled => Mode::Sampled { seed, samples },
                ModeArg::Structured => Mode::Structured { seed, samples },
            };
            cmd_verify(&input, &checks, mode, &mut out)
        }
        Command::Formulas { q, n } => cmd_formulas(q, n, &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
