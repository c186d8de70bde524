use std::process::ExitCode;

use clap::Parser;
use k2ws::parse::FieldSpec;
use k2ws::report::{run, Command, RunOptions};

/// Groebner bases, Ext tables and K2 certificates for finitely presented algebras.
#[derive(Parser)]
#[command(name = "k2ws", version)]
struct Cli {
    /// One of: gb, gr, hilbert, essential, ext, k2, lift, face
    #[arg(value_parser = |s: &str| s.parse::<Command>().map_err(|e| e.to_string()))]
    command: Command,
    /// Job file
    file: std::path::PathBuf,
    /// Truncation degree D
    #[arg(long)]
    bound: Option<usize>,
    /// Largest cohomological degree
    #[arg(long)]
    nmax: Option<usize>,
    /// Coefficient field, GF(p) or QQ
    #[arg(long, value_parser = |s: &str| FieldSpec::parse(s).map_err(|e| e.to_string()))]
    field: Option<FieldSpec>,
    /// Emit one JSON object instead of text
    #[arg(long)]
    json: bool,
    /// Search vertex orderings (face command)
    #[arg(long)]
    search_orderings: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let text = match std::fs::read_to_string(&cli.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.file.display());
            return ExitCode::from(1);
        }
    };
    let opts = RunOptions {
        bound: cli.bound,
        nmax: cli.nmax,
        field: cli.field,
        search_orderings: cli.search_orderings,
    };
    match run(cli.command, &text, &opts) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
