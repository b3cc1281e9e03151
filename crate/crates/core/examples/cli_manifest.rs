//! Runs the `eval` subcommand in-process from a manifest and prints its summary.

use zetalab::cli::{default_config_text, execute, Command, RunManifest};

fn main() -> zetalab::Result<()> {
    println!("# default eval config\n{}", default_config_text(Command::Eval)?);
    let manifest = RunManifest { workers: 1, ..RunManifest::new(Command::Eval) };
    let out = execute(&manifest)?;
    println!("# exit status {}\n{}", out.status.code(), out.summary);
    Ok(())
}
