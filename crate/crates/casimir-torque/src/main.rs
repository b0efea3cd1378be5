use std::io::Write;
use std::path::PathBuf;

use clap::Parser;

use casimir_torque::config::load_config;
use casimir_torque::output::{run, RunSummary};

/// Casimir torque between anisotropic mirrors: parameter scans and
/// cross-validation, driven by a JSON config.
#[derive(Parser)]
#[command(name = "casimir-torque", version)]
struct Cli {
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Write the table here instead of the config's `output` (or stdout).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Suppress the summary line on stderr.
    #[arg(long)]
    quiet: bool,
}

fn summarize(summary: &RunSummary, destination: &str) -> String {
    let mut line = format!(
        "{} rows ({} failed) -> {destination}",
        summary.rows, summary.failed_rows
    );
    if let Some(v) = summary.validation {
        line.push_str(&format!(
            "; max deviation {:.3e}{} [{}]",
            v.max_deviation,
            v.c0.map_or(String::new(), |c| format!(", c0 = {c:.12}")),
            if v.passed { "PASS" } else { "FAIL" }
        ));
    }
    line
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = Cli::parse();

    let cfg = match load_config(&cli.config) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };

    let base_dir = cli.config.parent().map(PathBuf::from);
    let output = cli.output.clone().or_else(|| cfg.output.clone());

    let result = match &output {
        Some(path) => std::fs::File::create(path)
            .map_err(casimir_torque::Error::from)
            .and_then(|file| {
                let mut writer = std::io::BufWriter::new(file);
                let summary = run(&cfg, base_dir.as_deref(), &mut writer)?;
                writer.flush()?;
                Ok(summary)
            }),
        None => {
            let stdout = std::io::stdout();
            let mut writer = std::io::BufWriter::new(stdout.lock());
            run(&cfg, base_dir.as_deref(), &mut writer).and_then(|summary| {
                writer.flush()?;
                Ok(summary)
            })
        }
    };

    match result {
        Ok(summary) => {
            if !cli.quiet {
                let dest = output
                    .as_deref()
                    .map_or("stdout".to_string(), |p| p.display().to_string());
                eprintln!("{}", summarize(&summary, &dest));
            }
            if summary.success() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config() {
                2
            } else {
                1
            }
        }
    }
}
