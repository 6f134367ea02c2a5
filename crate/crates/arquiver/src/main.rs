use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = arquiver::cli::Cli::parse();
    match arquiver::cli::run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
