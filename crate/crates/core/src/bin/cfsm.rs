use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use composite_fourier::report::{
    cmd_approximate, cmd_compare, cmd_convergence, exit_code, format_compare_table, parse_terms,
    MethodSelection, OutputFormat, SampleSelection, StudyConfig,
};
use composite_fourier::{Error, Result};

#[derive(Parser)]
#[command(name = "cfsm", version, about = "Composite Fourier series approximation studies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump boundary, corner, edge and internal coefficients.
    Approximate(StudyArgs),
    /// Error indexes against the number of terms.
    Convergence(StudyArgs),
    /// Composite and direct expansion side by side at the largest truncation.
    Compare(StudyArgs),
}

#[derive(Args)]
struct StudyArgs {
    /// Sample id 1..8 or "all".
    #[arg(long)]
    sample: Option<String>,
    /// composite, direct or both.
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    r: Option<usize>,
    /// Comma separated truncations, ascending.
    #[arg(long)]
    terms: Option<String>,
    /// Sampling points per direction.
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv, json or both.
    #[arg(long)]
    format: Option<String>,
    /// key=value file; its entries win over flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl StudyArgs {
    fn into_config(self) -> Result<StudyConfig> {
        let mut c = StudyConfig::default();
        if let Some(s) = self.sample {
            c.samples = s.parse::<SampleSelection>()?;
        }
        if let Some(m) = self.method {
            c.method = m.parse::<MethodSelection>()?;
        }
        if let Some(r) = self.r {
            c.r = r;
        }
        if let Some(t) = self.terms {
            c.terms = parse_terms(&t)?;
        }
        if self.grid.is_some() {
            c.grid = self.grid;
        }
        if let Some(o) = self.out {
            c.out = o;
        }
        if let Some(f) = self.format {
            c.format = f.parse::<OutputFormat>()?;
        }
        if let Some(path) = self.config {
            c.apply_config_file(&path)?;
        }
        c.validate()?;
        Ok(c)
    }
}

fn init_threads() -> Result<()> {
    let Ok(v) = std::env::var("CFSM_THREADS") else { return Ok(()) };
    let n: usize = v
        .parse()
        .map_err(|_| Error::Config(format!("CFSM_THREADS must be an integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Config(e.to_string()))
}

fn run(cli: Cli) -> Result<()> {
    init_threads()?;
    match cli.command {
        Command::Approximate(a) => {
            let c = a.into_config()?;
            for d in cmd_approximate(&c)? {
                println!("sample {}: {} = {:?}", d.sample, d.supplementary.labels.join(" "), d.supplementary.values);
            }
        }
        Command::Convergence(a) => {
            let c = a.into_config()?;
            let n = cmd_convergence(&c)?.len();
            println!("{n} records written to {}", c.out.display());
        }
        Command::Compare(a) => {
            let c = a.into_config()?;
            print!("{}", format_compare_table(&cmd_compare(&c)?, c.r));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
