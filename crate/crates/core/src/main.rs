use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use partition_logic::cli::{self, CommandResult, LatticeOp, Options, SampleKind, SampleParams};
use partition_logic::{Base, Error};

/// Partition logic, logical entropy and Shannon entropy.
#[derive(Debug, Parser)]
#[command(name = "partition-logic", version)]
struct Args {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Logarithm base for Shannon quantities: `2` (bits) or `e` (nats).
    #[arg(long, global = true, value_parser = parse_base)]
    base: Option<Base>,
    /// Compute logical quantities in exact rationals.
    #[arg(long, global = true)]
    exact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Logical and Shannon entropy of a partition (`0,1|2`) or distribution (`1/2,1/4,1/4`).
    Entropy {
        input: String,
        /// Point weights for partition input.
        #[arg(long)]
        weights: Option<String>,
        /// Treat input without `|` as a single-block partition.
        #[arg(long)]
        partition: bool,
    },
    /// Logical and Shannon quantities of a joint distribution (CSV; rows are x values).
    Joint { csv: String },
    /// Lattice operation on two partitions: `join`, `meet` or `implies`.
    Ops { operation: String, a: String, b: String },
    /// Cross entropies and divergences of two distributions.
    Compare { p: String, q: String },
    /// Run every identity suite; exit code 2 on failure.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random inputs per randomized suite.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Bell count and refinement cover relation of the partitions of n elements.
    Lattice {
        n: usize,
        /// Include a Graphviz DOT rendering.
        #[arg(long)]
        dot: bool,
    },
    /// Monte Carlo estimate: `pairs`, `seqavg` or `typical`.
    Sample {
        kind: String,
        p: String,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        /// Message length for `typical`.
        #[arg(long, default_value_t = 1000)]
        length: u64,
        /// Message count for `typical`.
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Multinomial entropy versus its Stirling approximations.
    Stirling { sizes: String },
}

fn parse_base(s: &str) -> Result<Base, String> {
    s.parse().map_err(|_| format!("expected `2` or `e`, got `{s}`"))
}

/// `-` reads stdin, an existing file path reads the file, anything else is inline text.
fn read_input(arg: &str) -> Result<String, Error> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Domain(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("reading {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn run(args: Args) -> Result<CommandResult, Error> {
    let opts = Options {
        base: args.base,
        exact: args.exact,
    };
    match args.command {
        Command::Entropy {
            input,
            weights,
            partition,
        } => {
            let weights = weights.map(|w| read_input(&w)).transpose()?;
            cli::cmd_entropy(read_input(&input)?.trim(), weights.as_deref().map(str::trim), partition, &opts)
        }
        Command::Joint { csv } => cli::cmd_joint(&read_input(&csv)?, &opts),
        Command::Ops { operation, a, b } => {
            let op: LatticeOp = operation.parse()?;
            cli::cmd_ops(op, read_input(&a)?.trim(), read_input(&b)?.trim(), &opts)
        }
        Command::Compare { p, q } => cli::cmd_compare(read_input(&p)?.trim(), read_input(&q)?.trim(), &opts),
        Command::Verify { max_n, seed, trials } => cli::cmd_verify(max_n, seed, trials),
        Command::Lattice { n, dot } => cli::cmd_lattice(n, dot),
        Command::Sample {
            kind,
            p,
            trials,
            length,
            samples,
            seed,
        } => {
            let kind: SampleKind = kind.parse()?;
            let params = SampleParams {
                trials,
                length,
                samples,
                seed,
            };
            cli::cmd_sample(kind, read_input(&p)?.trim(), params, &opts)
        }
        Command::Stirling { sizes } => cli::cmd_stirling(read_input(&sizes)?.trim(), &opts),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pretty = args.pretty;
    match run(args) {
        Ok(result) => {
            if pretty {
                print!("{}", result.to_table());
            } else {
                println!("{}", result.to_json());
            }
            ExitCode::from(result.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
