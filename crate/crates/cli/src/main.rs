use std::process::ExitCode;

use clap::Parser;
use dirac_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((report, ok)) => {
            print!("{report}");
            if !report.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
