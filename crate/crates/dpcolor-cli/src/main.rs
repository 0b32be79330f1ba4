use clap::Parser;

use dpcolor_cli::cli::Cli;
use dpcolor_cli::commands;

fn main() {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
