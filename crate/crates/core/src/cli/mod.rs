//! Command implementations behind the `doily` binary. Each command writes to
//! the given streams and returns its exit status; argument parsing lives in
//! the binary.

pub mod catalog;
pub mod export;
pub mod tables;
pub mod verify;

use std::io::Write;
use std::path::Path;

pub use catalog::Catalog;
pub use export::{export_csv, export_dot, ExportModel};
pub use tables::{mermin_report, mermin_squares, table1_csv, table1_text};
pub use verify::{run_verification, Check, VerificationReport, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Failure = 1,
    Usage = 2,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Json,
    Dot,
    Csv,
}

fn report_json(report: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn build_catalog(err: &mut dyn Write) -> Option<Catalog> {
    match Catalog::build() {
        Ok(c) => Some(c),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            None
        }
    }
}

/// Prints the report in `format`; with `output`, also writes it there as JSON.
pub fn cmd_verify(
    format: ReportFormat,
    output: Option<&Path>,
    opts: &VerifyOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Exit {
    let report = run_verification(opts);
    let text = match format {
        ReportFormat::Text => report.render_text(),
        ReportFormat::Json => report_json(&report),
    };
    let _ = out.write_all(text.as_bytes());
    if let Some(path) = output {
        if let Err(e) = std::fs::write(path, report_json(&report)) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return Exit::Usage;
        }
    }
    if report.overall {
        Exit::Success
    } else {
        if let Some(c) = report.first_failure() {
            let _ = writeln!(
                err,
                "verification failed at {}: expected {}, actual {}",
                c.name, c.expected, c.actual
            );
        }
        Exit::Failure
    }
}

pub fn cmd_table1(format: TableFormat, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    let Some(cat) = build_catalog(err) else {
        return Exit::Failure;
    };
    let census = cat.veldkamp.census();
    let text = match format {
        TableFormat::Text => table1_text(census),
        TableFormat::Csv => table1_csv(census),
    };
    let _ = out.write_all(text.as_bytes());
    Exit::Success
}

pub fn cmd_export(
    format: ExportFormat,
    output: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Exit {
    let Some(cat) = build_catalog(err) else {
        return Exit::Failure;
    };
    let body = match format {
        ExportFormat::Json => ExportModel::from_catalog(&cat).to_json(),
        ExportFormat::Dot => export_dot(&cat),
        ExportFormat::Csv => export_csv(&cat),
    };
    if let Err(e) = std::fs::write(output, body) {
        let _ = writeln!(err, "error: cannot write {}: {e}", output.display());
        return Exit::Usage;
    }
    let _ = writeln!(out, "wrote {}", output.display());
    Exit::Success
}

pub fn cmd_mermin(quiet: bool, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    let Some(cat) = build_catalog(err) else {
        return Exit::Failure;
    };
    match mermin_report(&cat, quiet) {
        Ok((text, all_negative)) => {
            let _ = out.write_all(text.as_bytes());
            if all_negative {
                Exit::Success
            } else {
                Exit::Failure
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Exit::Failure
        }
    }
}
