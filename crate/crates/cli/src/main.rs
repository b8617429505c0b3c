use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mergelab::{Algorithm, CliError, SplitArg};

#[derive(Parser)]
#[command(name = "mergelab", version, about = "Comparison counts of MergeSort: exact, measured and verified")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// CSV of W(n), B(n), the smooth bounds, ε(n) and the tree depth
    Table {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
    },
    /// Worst-case permutation of 1..=N for MergeSort
    GenWorst { n: u64 },
    /// Run every invariant suite up to --max and the exhaustive oracles up to --brute
    Verify {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 6)]
        brute: usize,
    },
    /// Dump the recursion tree of MergeSort on N keys
    Tree { n: u64 },
    /// Count comparisons on a comma-separated list of integers (FILE or stdin)
    Count {
        #[arg(long, value_enum, default_value = "mergesort")]
        alg: Algorithm,
        /// Split convention used by mergesort
        #[arg(long, value_enum, default_value = "floor")]
        split: SplitArg,
        file: Option<PathBuf>,
    },
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Table { min, max, step } => mergelab::table(out, min, max, step).map(|()| true),
        Command::GenWorst { n } => mergelab::gen_worst(out, n),
        Command::Verify { max, brute } => mergelab::verify(out, max, brute),
        Command::Tree { n } => mergelab::tree(out, n).map(|()| true),
        Command::Count { alg, split, file } => {
            let input = match file {
                Some(path) => fs::read_to_string(&path)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
                None => {
                    let mut buf = String::new();
                    io::stdin().read_to_string(&mut buf)?;
                    buf
                }
            };
            mergelab::count(out, &input, alg, split).map(|()| true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(true), Ok(())) => ExitCode::SUCCESS,
        (Ok(false), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
