use std::path::PathBuf;
use std::process::ExitCode;

use cce_cli::config::keys_help;
use cce_cli::{cmd_complete, cmd_eval, cmd_fit, cmd_ingest, cmd_simulate, cmd_train_strategies, CliError, RunConfig};
use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

/// Ensemble code completion: corpus ingestion, strategy training, typing
/// simulation, model fitting and keystroke evaluation.
///
/// Everything that affects artifacts is read from the config file.
/// Exit codes: 0 success, 2 config error, 3 missing artifact, 4 internal error.
#[derive(Parser)]
#[command(name = "cce", version)]
struct Cli {
    /// Run configuration (TOML).
    #[arg(short, long, global = true, default_value = "cce.toml")]
    config: PathBuf,
    /// Log more; repeat for debug output.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read, filter, clean and split the corpus.
    Ingest,
    /// Build the sub-token trie, the BPE vocabulary and the n-gram model.
    TrainStrategies,
    /// Replay typing over the simulation and test splits.
    Simulate,
    /// Fit the acceptance model, the fusion ranker and the score scaler.
    Fit,
    /// Metrics, ablation, strategy characteristics and cost spectra.
    Eval,
    /// Print the completion list at one cursor position.
    Complete {
        /// Source file to complete in.
        #[arg(long)]
        file: PathBuf,
        /// Cursor position in characters.
        #[arg(long)]
        offset: usize,
    },
    /// Every stage from ingest to eval.
    All,
}

const INGEST_KEYS: &[&str] = &["seed", "paths", "corpus", "preprocess"];
const TRAIN_KEYS: &[&str] = &["paths", "strategies", "global", "lm"];
const SIMULATE_KEYS: &[&str] = &["seed", "workers", "paths", "strategies", "engine", "beam", "external"];
const FIT_KEYS: &[&str] = &["paths", "gbdt", "acceptance"];
const EVAL_KEYS: &[&str] = &["paths", "strategies", "pipeline"];
const COMPLETE_KEYS: &[&str] = &["paths", "strategies", "engine", "beam", "external", "pipeline"];
const ALL_KEYS: &[&str] = &[
    "seed", "workers", "paths", "corpus", "preprocess", "strategies", "global", "lm", "engine", "beam", "external",
    "gbdt", "acceptance", "pipeline",
];

fn command() -> clap::Command {
    let mut cmd = Cli::command();
    for (name, keys) in [
        ("ingest", INGEST_KEYS),
        ("train-strategies", TRAIN_KEYS),
        ("simulate", SIMULATE_KEYS),
        ("fit", FIT_KEYS),
        ("eval", EVAL_KEYS),
        ("complete", COMPLETE_KEYS),
        ("all", ALL_KEYS),
    ] {
        cmd = cmd.mut_subcommand(name, |sub| sub.after_long_help(keys_help(keys)).after_help(keys_help(keys)));
    }
    cmd
}

fn run(cli: &Cli) -> Result<Vec<serde_json::Value>, CliError> {
    let cfg = RunConfig::load(&cli.config)?;
    Ok(match &cli.command {
        Command::Ingest => vec![cmd_ingest(&cfg)?],
        Command::TrainStrategies => vec![cmd_train_strategies(&cfg)?],
        Command::Simulate => vec![cmd_simulate(&cfg)?],
        Command::Fit => vec![cmd_fit(&cfg)?],
        Command::Eval => vec![cmd_eval(&cfg)?],
        Command::Complete { file, offset } => vec![cmd_complete(&cfg, file, *offset)?],
        // summaries are printed as each stage finishes, so a late failure keeps the earlier lines
        Command::All => {
            for stage in [cmd_ingest, cmd_train_strategies, cmd_simulate, cmd_fit, cmd_eval] {
                println!("{}", stage(&cfg)?);
            }
            Vec::new()
        }
    })
}

fn main() -> ExitCode {
    let matches = command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok(summaries) => {
            for s in summaries {
                println!("{s}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            println!("{}", serde_json::json!({ "status": "error", "exit_code": e.exit_code(), "error": e.to_string() }));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
