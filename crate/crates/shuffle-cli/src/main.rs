//! Command-line front end for exact shuffle-group classification.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shuffle_cli::{
    run_cascade, run_classify, run_sweep, run_table1, SweepConfig, EXIT_USAGE,
};
use shuffle_groups::classify::ClassifyBudget;

#[derive(Parser)]
#[command(
    name = "shuffle-cli",
    about = "Exact construction and classification of generalised shuffle groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Maximum admissible deck size k*n.
    #[arg(long, default_value_t = 2000)]
    max_degree: usize,
    /// Deck size up to which the exact order is always computed
    /// deterministically first (monte-carlo giant shortcut beyond).
    #[arg(long, default_value_t = 600)]
    deterministic_degree: usize,
}

impl From<BudgetArgs> for ClassifyBudget {
    fn from(a: BudgetArgs) -> Self {
        ClassifyBudget {
            max_degree: a.max_degree,
            deterministic_degree: a.deterministic_degree,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Pile-group spec: sym | alt | cyclic | elem2:t | agl:e:p | wreath:l:e.
    #[arg(long, default_value = "sym")]
    pile_group: String,
    /// Comma-separated pile counts, e.g. 3,4,5.
    #[arg(long, value_delimiter = ',', required = true)]
    k_list: Vec<usize>,
    /// Largest cards-per-pile value (inclusive; n starts at 2).
    #[arg(long, required = true)]
    n_max: usize,
    /// Output JSONL file (appended).
    #[arg(long, required = true)]
    out: PathBuf,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Base seed for the derived per-task seeds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Skip (k, n) pairs already present in the output file.
    #[arg(long)]
    resume: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single shuffle group Sh(P, n) with k piles.
    Classify {
        /// Number of piles.
        #[arg(long)]
        k: usize,
        /// Cards per pile.
        #[arg(long)]
        n: usize,
        /// Pile-group spec: sym | alt | cyclic | elem2:t | agl:e:p | wreath:l:e.
        #[arg(long, default_value = "sym")]
        pile_group: String,
        /// Base seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the record as one JSON line instead of a summary.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Verify the classical table of shuffle groups on 2n cards (k = 2).
    Table1 {
        /// Largest n (inclusive).
        #[arg(long, required = true)]
        n_max: usize,
        /// Base seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Verify the cascading groups G_t = Sh(V_t, 2^(e-t)n) and their laws.
    Cascade {
        /// Cascade height: k = 2^e piles at the top.
        #[arg(long, required = true)]
        e: u32,
        /// Cards per top-level pile (must have an odd prime factor).
        #[arg(long, required = true)]
        n: usize,
        /// Deck-size cap for cascade verification.
        #[arg(long, default_value_t = 96)]
        max_degree: usize,
        /// Base seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep (k, n) ranges, appending one JSONL record per classification.
    Sweep(SweepArgs),
    /// Alias for sweep with the conjectural-classification exclusions
    /// (n = k^f, and n = 2^f for k = 4) pre-applied — sweep applies them too.
    Conjecture(SweepArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Classify {
            k,
            n,
            pile_group,
            seed,
            json,
            budget,
        } => run_classify(&pile_group, k, n, budget.into(), seed, json),
        Command::Table1 { n_max, seed, budget } => {
            if n_max < 2 {
                eprintln!("error: --n-max must be at least 2");
                EXIT_USAGE
            } else {
                run_table1(n_max, budget.into(), seed).1
            }
        }
        Command::Cascade {
            e,
            n,
            max_degree,
            seed,
        } => match run_cascade(e, n, max_degree, seed) {
            Ok(code) => code,
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
        Command::Sweep(args) | Command::Conjecture(args) => {
            let config = SweepConfig {
                pile_group: args.pile_group,
                k_list: args.k_list,
                n_max: args.n_max,
                jobs: args.jobs,
                seed: args.seed,
                resume: args.resume,
                budget: args.budget.into(),
            };
            match run_sweep(&config, &args.out) {
                Ok(code) => code,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_USAGE
                }
            }
        }
    };
    ExitCode::from(code as u8)
}
