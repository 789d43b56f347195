use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use syncode_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.run(&mut std::io::stdin().lock()) {
        Ok(run) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(run.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(run.code as u8)
        }
        Err(e) => {
            eprintln!("syncode: {e}");
            ExitCode::from(2)
        }
    }
}
