use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use isotonic_cli::args::{to_manifest, Cli, Command};
use isotonic_cli::{execute, CliResult, CommandKind, RunManifest, RunOutput};

fn write_output(manifest: &RunManifest, output: &RunOutput, out: Option<&Path>) -> CliResult<()> {
    if manifest.command == CommandKind::ReproduceTables {
        let dir = out.unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        for (name, text) in &output.files {
            fs::write(dir.join(name), text)?;
        }
        print!("{}", output.body);
        return Ok(());
    }
    match out {
        Some(path) => fs::write(path, &output.body)?,
        None => print!("{}", output.body),
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<bool> {
    let (manifest, out) = match &cli.command {
        Command::Replay { manifest, out } => (
            RunManifest::from_json(&fs::read_to_string(manifest)?)?,
            out.clone(),
        ),
        other => to_manifest(other).expect("non-replay commands build a manifest"),
    };
    if let Some(path) = &cli.save_manifest {
        fs::write(path, manifest.to_json()? + "\n")?;
    }
    let output = execute(&manifest)?;
    write_output(&manifest, &output, out.as_deref())?;
    Ok(output.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("isotonic: one or more checks failed");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("isotonic: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
