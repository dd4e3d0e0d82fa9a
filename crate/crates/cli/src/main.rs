use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ncreflect::commands::{self, Format, Outcome, Sides};

/// Exact invariants of semisimple Hopf actions on graded algebras.
#[derive(Parser)]
#[command(name = "ncreflect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Degree {
    /// Truncation degree for all graded computations.
    #[arg(long, env = "NCREFLECT_MAX_DEGREE")]
    max_degree: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and verify an input file.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        degree: Degree,
    },
    /// Run the full analysis and print a report.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        degree: Degree,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// The built-in catalogue.
    Preset {
        #[command(subcommand)]
        command: PresetCommand,
    },
    /// Degree-one divisors of an element.
    Divisors {
        file: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        #[command(flatten)]
        degree: Degree,
    },
}

#[derive(Subcommand)]
enum PresetCommand {
    /// List catalogue entries.
    List,
    /// Analyze a preset and compare with its golden report.
    Run {
        name: String,
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Print a preset as an input file.
    Spec { name: String },
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Outcome = match cli.command {
        Command::Validate { file, degree } => commands::validate(&file, degree.max_degree),
        Command::Analyze {
            file,
            degree,
            out,
            format: f,
        } => commands::analyze(&file, degree.max_degree, format(f), out.as_deref()),
        Command::Preset { command } => match command {
            PresetCommand::List => commands::preset_list(),
            PresetCommand::Run {
                name,
                degree,
                out,
                format: f,
            } => commands::preset_run(&name, degree.max_degree, format(f), out.as_deref()),
            PresetCommand::Spec { name } => commands::preset_spec(&name),
        },
        Command::Divisors {
            file,
            element,
            side,
            degree,
        } => {
            let sides = match side {
                SideArg::Left => Sides::Left,
                SideArg::Right => Sides::Right,
                SideArg::Both => Sides::Both,
            };
            commands::divisors_command(&file, &element, sides, degree.max_degree)
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
