mod args;
mod commands;
mod examples;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::{CliError, Output};

fn emit(cli: &Cli, out: &Output) -> std::io::Result<()> {
    let body = match cli.format {
        Format::Text => format!("{}\n", out.text),
        Format::Doc if out.stream => {
            let items = out.doc.as_array().map(Vec::as_slice).unwrap_or_default();
            items.iter().map(|v| format!("{v}\n")).collect()
        }
        Format::Doc => format!("{}\n", serde_json::to_string_pretty(&out.doc).expect("documents serialize")),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if cli.banner {
        eprintln!("bialg {}", env!("CARGO_PKG_VERSION"));
    }
    let result = match &cli.command {
        Command::Examples(cmd) => examples::run(cmd),
        cmd => commands::run(cmd, &commands::Files).map(|o| (o, 0)),
    };
    let (out, failed) = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if let Err(e) = emit(&cli, &out) {
        eprintln!("{}", CliError::Usage(format!("cannot write output: {e}")));
        return ExitCode::from(2);
    }
    if failed > 0 {
        eprintln!("error[Mismatch]: {failed} example run(s) did not match");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
