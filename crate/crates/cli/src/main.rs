use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lamech_cli::{
    exit_code, flow_compare, flow_run, fol_eval, fol_minmodel, lam_normalize, parse_inputs, CliError, RunReport,
    DEFAULT_BOUND, DEFAULT_MAX_DEPTH, DEFAULT_MAX_ROUNDS, DEFAULT_MAX_STEPS,
};
use lamech_flowchart::{DataState, Limits};

#[derive(Parser)]
#[command(name = "lamech", about = "Lambda terms, first-order models and flowcharts", version)]
struct Cli {
    /// Print one JSON record per answer instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tuple-form lambda terms.
    Lam {
        #[command(subcommand)]
        command: LamCommand,
    },
    /// First-order documents.
    Fol {
        #[command(subcommand)]
        command: FolCommand,
    },
    /// Flowchart programs.
    Flow {
        #[command(subcommand)]
        command: FlowCommand,
    },
}

#[derive(Subcommand)]
enum LamCommand {
    /// Normalize every term in the file, leftmost-outermost.
    Normalize {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
}

#[derive(Subcommand)]
enum FolCommand {
    /// Answer the eval, holds and denote queries in the file.
    Eval { file: PathBuf },
    /// Least model of the predicate definitions in the file.
    Minmodel {
        file: PathBuf,
        /// Carrier bound; overrides the file's domain declaration.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS)]
        max_rounds: usize,
    },
}

#[derive(Subcommand)]
enum FlowCommand {
    /// Run the main procedure.
    Run {
        file: PathBuf,
        /// Initial values, e.g. X=100,Y=161. Unlisted locations start at 0.
        #[arg(long = "in", default_value = "")]
        inputs: String,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Compare operational and declarative relations over 0..bound-1.
    Compare {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
}

fn dispatch(command: Command) -> Result<Vec<RunReport>, CliError> {
    match command {
        Command::Lam { command: LamCommand::Normalize { file, max_steps } } => lam_normalize(&file, max_steps),
        Command::Fol { command: FolCommand::Eval { file } } => fol_eval(&file),
        Command::Fol { command: FolCommand::Minmodel { file, bound, max_rounds } } => {
            Ok(vec![fol_minmodel(&file, bound, max_rounds)?])
        }
        Command::Flow { command: FlowCommand::Run { file, inputs, max_steps, max_depth } } => {
            let inputs: DataState = parse_inputs(&inputs)?;
            Ok(vec![flow_run(&file, &inputs, Limits { max_steps, max_depth })?])
        }
        Command::Flow { command: FlowCommand::Compare { file, bound } } => Ok(vec![flow_compare(&file, bound)?]),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(reports) => {
            for r in &reports {
                if cli.json {
                    println!("{}", r.to_json_line());
                } else {
                    println!("{}", r.to_text());
                }
            }
            ExitCode::from(exit_code(&reports) as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.render());
            ExitCode::from(2)
        }
    }
}
