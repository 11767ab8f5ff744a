use clap::{Parser, Subcommand};
use hopfcheck_cli::{
    classify_exit, cmd_bichar, cmd_check_theorem, cmd_prime_search, cmd_sklyanin,
    cmd_verify_action, Config, PrimeSearchOptions,
};
use hopfcheck_core::{Error, Result};
use std::io::Read;
use std::process::ExitCode;

/// Exact computation with quantum polynomial algebras, Hopf actions, and
/// Sklyanin algebras: theorem-hypothesis checking and invariants.
#[derive(Parser)]
#[command(name = "hopfcheck", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Config document (`key = value` with `[section]` headers); `-` or omitted reads
    /// standard input
    #[arg(long, global = true)]
    config: Option<String>,

    /// Emit JSON (the default; present for symmetry with --csv)
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV rows (prime-search only)
    #[arg(long, global = true)]
    csv: bool,

    /// Degree cutoff for action verification and Sklyanin dimensions
    #[arg(long, global = true)]
    max_degree: Option<i64>,

    /// Search bound: primes for prime-search, additions for sigma orders
    #[arg(long, global = true)]
    bound: Option<u64>,

    /// Seed for the random-sample property demos in verify-action
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Count a prime as good only if every character works (prime-search)
    #[arg(long, global = true)]
    universal: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the hypotheses of thm-4.1, cor-4.2, thm-5.2, or thm-6.7
    CheckTheorem,
    /// Verify Hopf axioms, module-algebra laws, and inner faithfulness
    VerifyAction,
    /// Sweep primes for reduction orders coprime to r
    PrimeSearch,
    /// Hilbert dimensions, degree-3 center, and translation order of S(a,b,c)
    Sklyanin,
    /// Lattice invariants of a bicharacter: l, radical, PI degree
    Bichar,
}

fn load_config(arg: &Option<String>) -> Result<Config> {
    let text = match arg.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}")))?,
    };
    Config::parse(&text)
}

fn run(cli: &Cli) -> Result<()> {
    let config = load_config(&cli.config)?;
    let max_degree = cli.max_degree.unwrap_or(6);
    let bound = cli.bound;
    match cli.command {
        Command::CheckTheorem => {
            let doc = cmd_check_theorem(&config, bound.unwrap_or(64))?;
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Command::VerifyAction => {
            let doc = cmd_verify_action(&config, max_degree, cli.seed.unwrap_or(0))?;
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Command::PrimeSearch => {
            let opts = PrimeSearchOptions {
                bound: bound.unwrap_or(10_000),
                universal: cli.universal,
                csv: cli.csv,
            };
            cmd_prime_search(
                &config,
                &opts,
                &mut std::io::stdout().lock(),
                &mut std::io::stderr().lock(),
            )?;
        }
        Command::Sklyanin => {
            let doc = cmd_sklyanin(&config, cli.max_degree.unwrap_or(5), bound.unwrap_or(64))?;
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Command::Bichar => {
            let doc = cmd_bichar(&config)?;
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(classify_exit(&e) as u8)
        }
    }
}
