use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use projdec_cli::{run, Cli, USAGE_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT)
        }
    }
}
