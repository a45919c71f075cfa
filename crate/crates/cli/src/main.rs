use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use sl2fd_cli::args::Cli;
use sl2fd_cli::commands::{run, Usage};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let help = matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = err.print();
            return if help { ExitCode::SUCCESS } else { ExitCode::from(2) };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Some(path) = &cli.output {
                let mut payload = outcome.stdout;
                payload.push('\n');
                if let Err(err) = std::fs::write(path, payload) {
                    eprintln!("cannot write {}: {err}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                let _ = writeln!(lock, "{}", outcome.stdout);
            }
            ExitCode::from(outcome.code)
        }
        Err(Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
