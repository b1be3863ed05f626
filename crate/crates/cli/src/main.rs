use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use natanzon_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((outcome, out)) => {
            let written = match out {
                Some(path) => std::fs::write(&path, &outcome.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout().write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("natanzon: {e}");
                return ExitCode::from(natanzon_cli::EXIT_CONFIG as u8);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("natanzon: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
