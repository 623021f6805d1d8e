use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

mod commands;
mod literals;

use literals::CliError;

#[derive(Parser, Debug)]
#[command(name = "repsnu", version, about = "Exact computations in Rep(S_v), parabolic category O and Schur-Weyl duality")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Lift the default size guards (arity 8, k 6, n 12).
    #[arg(long, global = true)]
    unsafe_limits: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compose two diagrams: the result is rho after pi.
    Compose(commands::ComposeArgs),
    /// Matrix of a bar diagram on C Inj(r, n).
    Specialize(commands::SpecializeArgs),
    /// The v-equivalence class of a Young diagram.
    Class(commands::ClassArgs),
    /// Hom dimensions between the indecomposables of a class.
    Homdim(commands::ClassArgs),
    /// Tables of the abelian envelope for a class.
    Blocks(commands::ClassArgs),
    /// gl(U)-character of a parabolic Verma module.
    Verma(commands::ModuleArgs),
    /// gl(U)-character of a module of category O, e.g. --object "L:1".
    Char(commands::ObjectArgs),
    /// BGG reciprocity on both sides for a class.
    Bgg(commands::BggArgs),
    /// Image of an envelope object under the Schur-Weyl functor.
    Sw(commands::ObjectArgs),
    /// Categorical dimension of grade k of the complex tensor power.
    Dim(commands::DimArgs),
    /// Run property suites.
    Verify(commands::VerifyArgs),
    /// Checks on the complex tensor power.
    Tensor(TensorArgs),
}

#[derive(Args, Debug)]
struct TensorArgs {
    #[command(subcommand)]
    command: commands::TensorCommand,
}

/// Rendered output: text for the terminal, JSON for `--json`, and whether a
/// verification inside failed.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: String, json: Value) -> Self {
        Output { text, json, failed: false }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let unsafe_limits = cli.unsafe_limits;
    match &cli.command {
        Command::Compose(a) => commands::compose(a, unsafe_limits),
        Command::Specialize(a) => commands::specialize(a, unsafe_limits),
        Command::Class(a) => commands::class(a),
        Command::Homdim(a) => commands::homdim(a),
        Command::Blocks(a) => commands::blocks(a),
        Command::Verma(a) => commands::verma(a),
        Command::Char(a) => commands::char(a),
        Command::Bgg(a) => commands::bgg(a),
        Command::Sw(a) => commands::sw(a),
        Command::Dim(a) => commands::dim(a, unsafe_limits),
        Command::Verify(a) => commands::verify(a, unsafe_limits),
        Command::Tensor(a) => commands::tensor(&a.command, unsafe_limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                println!("{}", out.text);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
