use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use fsind_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("fsind: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
