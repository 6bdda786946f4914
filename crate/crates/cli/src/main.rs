use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use permuto_cli::{error_code, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprintln!("error=USAGE");
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let text = report.to_string();
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error=IO_ERROR");
                    eprintln!("message={}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if report.get("selftest").is_some_and(|v| v.starts_with("fail")) {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = error_code(&e);
            eprintln!("error={code}");
            eprintln!("message={e:#}");
            ExitCode::from(if code == "USAGE" { 2 } else { 1 })
        }
    }
}
