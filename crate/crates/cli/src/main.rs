use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;
use cubica::{run, Cli, CliError};

fn emit(cli: &Cli, value: &serde_json::Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    match &cli.output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|v| {
        emit(&cli, &v)?;
        Ok(v)
    });
    match result {
        Ok(v) if v.get("passed") == Some(&serde_json::Value::Bool(false)) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
