//! Runs every command on a job file and prints the text report, as the
//! binary does. Usage: `cargo run --example run_job -- examples/jobs/skew_cubic.k2`.

use k2ws::report::{run, Command, RunOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "examples/jobs/skew_cubic.k2".into());
    let text = std::fs::read_to_string(&path)?;
    let opts = RunOptions::default();
    for cmd in [Command::Gb, Command::Gr, Command::Essential, Command::Ext] {
        let rep = run(cmd, &text, &opts)?;
        println!("{}", rep.to_text());
    }
    Ok(())
}
