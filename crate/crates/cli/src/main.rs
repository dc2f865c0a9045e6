use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, ValueEnum};

use dg_forge::commands::{Command, Overrides, Session};
use dg_forge::fixtures::run_fixtures;
use dg_forge::spec::{parse_field, parse_spec};
use dgforge::report::AnalysisReport;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exact checks on differential graded rings.
///
/// Exit status: 0 when no check fails, 1 when some check fails, 2 on bad input.
#[derive(Parser, Debug)]
#[command(name = "dg-forge", version)]
struct Cli {
    /// validate, radicals, singular, essential, localise, goldie, homcompare, fixtures or all
    command: String,
    /// Input file; `-` or absent reads stdin. Not used by `fixtures`.
    spec: Option<PathBuf>,
    /// Override the field, e.g. `Q`, `F3`, `GF(7)`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Half-width N of the degree window [-N, N].
    #[arg(long)]
    window: Option<i64>,
    /// Largest lattice to enumerate exhaustively.
    #[arg(long)]
    budget: Option<usize>,
    /// Reject unknown keys instead of warning.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn read_spec(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn report(cli: &Cli) -> Result<AnalysisReport> {
    if cli.command == "fixtures" {
        return run_fixtures();
    }
    let cmd = Command::parse(&cli.command).ok_or_else(|| anyhow!("unknown command `{}`", cli.command))?;
    let text = read_spec(cli.spec.as_ref())?;
    let (spec, warnings) = parse_spec(&text, cli.strict)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    let overrides = Overrides {
        field: cli.field.as_deref().map(parse_field).transpose()?,
        seed: cli.seed,
        samples: cli.samples,
        window: cli.window,
        budget: cli.budget,
    };
    Session::new(spec, &overrides)?.run(cmd)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match report(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let mut bytes = match cli.format {
        Format::Json => r.to_json(),
        Format::Text => r.to_text(),
    };
    if matches!(cli.format, Format::Json) {
        bytes.push('\n');
    }
    let written = match &cli.output {
        Some(p) => std::fs::write(p, &bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{bytes}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if r.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
