use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use doily::cli::{self, ExportFormat, ReportFormat, TableFormat, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "doily",
    version,
    about = "W(2), its Veldkamp space and the two-qubit Pauli group"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every count and structural check; exit 0 only if all pass.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_drop_line: Option<usize>,
    },
    /// Print the census of Veldkamp line types.
    Table1 {
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Write the model as JSON, Graphviz DOT, or CSV census tables.
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print every grid as a Mermin square with its signs.
    Mermin {
        #[arg(long)]
        quiet: bool,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let exit = match args.command {
        Command::Verify {
            format,
            output,
            inject_drop_line,
        } => {
            let opts = VerifyOptions {
                drop_line: inject_drop_line,
            };
            cli::cmd_verify(format, output.as_deref(), &opts, &mut out, &mut err)
        }
        Command::Table1 { format } => cli::cmd_table1(format, &mut out, &mut err),
        Command::Export { format, output } => cli::cmd_export(format, &output, &mut out, &mut err),
        Command::Mermin { quiet } => cli::cmd_mermin(quiet, &mut out, &mut err),
    };
    ExitCode::from(exit.code())
}
