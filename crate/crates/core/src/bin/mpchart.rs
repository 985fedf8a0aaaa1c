use clap::Parser;
use mpchart::cli::{execute, RunConfig};

fn main() {
    let config = RunConfig::parse();
    if let Err(e) = execute(&config) {
        eprintln!("mpchart: {e}");
        std::process::exit(e.exit_code());
    }
}
