mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use run::{run, Outcome};

/// Writes to stdout, exiting quietly with the conventional SIGPIPE status
/// when the reader has gone away (so piping into `head` never panics).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() {
        std::process::exit(141);
    }
}

/// Error reports share the success schema so consumers parse one shape.
fn emit_error(message: &str, code: u8) -> ExitCode {
    let body = serde_json::json!({ "error": message, "schema": 1 });
    emit(&format!("{body}\n"));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return emit_error(e.to_string().trim_end(), 2),
    };
    match run(&cli.command) {
        Ok(Outcome { payload, table, failed }) => {
            if cli.pretty {
                emit(&table);
            } else {
                emit(&format!("{payload}\n"));
            }
            ExitCode::from(u8::from(failed))
        }
        Err(e) => emit_error(e.message(), e.exit_code()),
    }
}
