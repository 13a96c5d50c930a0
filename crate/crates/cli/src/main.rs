use std::io::{self, Write};
use std::process::ExitCode;

use chromakit_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("chromakit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
