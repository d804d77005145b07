use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use morse_cli::{commands, exit_code_for, verify, GlobalOpts, OutputFormat, Suite};
use morse_core::morse_complex::DEFAULT_FACE_BUDGET;

#[derive(Parser)]
#[command(
    name = "morse",
    version,
    about = "Discrete Morse complexes, acyclic matchings, and exact homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Worker-pool partition count; results are identical for every value
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Face budget for Morse-complex construction
    #[arg(long, global = true, default_value_t = DEFAULT_FACE_BUDGET)]
    max_faces: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Ingest a facet-list file and print the complex summary
    Build { input: PathBuf },

    /// Construct the discrete Morse complex of the complex in a facet file
    Dmc {
        input: PathBuf,
        /// Build the pure Morse complex (maximum matchings only)
        #[arg(long)]
        pure: bool,
        /// Write the result as a facet list usable by `build` and `homology`
        #[arg(long)]
        export: Option<PathBuf>,
    },

    /// Reduced integer homology of the complex in a facet file
    Homology {
        input: PathBuf,
        /// Reduced convention (pass --reduced=false for the unreduced H_0)
        #[arg(long, default_value_t = true, action = ArgAction::Set,
              num_args = 0..=1, default_missing_value = "true")]
        reduced: bool,
    },

    /// Run a named verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = GlobalOpts {
        threads: cli.threads.max(1),
        max_faces: cli.max_faces,
    };
    let result = match &cli.command {
        Command::Build { input } => commands::cmd_build(input, &opts),
        Command::Dmc {
            input,
            pure,
            export,
        } => commands::cmd_dmc(input, *pure, export.as_deref(), &opts),
        Command::Homology { input, reduced } => commands::cmd_homology(input, *reduced, &opts),
        Command::Verify { suite } => verify::run_suite(*suite, opts.threads, opts.max_faces),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.all_passed() {
                ExitCode::from(morse_cli::EXIT_OK as u8)
            } else {
                ExitCode::from(morse_cli::EXIT_CHECK_FAILED as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
