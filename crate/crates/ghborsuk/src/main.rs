use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ghborsuk::io::{read_space, render, IoError, MatrixFormat};
use ghborsuk::report::{to_json, BorsukJson, GhJson};
use ghborsuk::suites::{run_suites, Suite, SuiteConfig};
use ghborsuk_core::{
    borsuk_number, delta_simplex, diameter_graph, generate, gh_bounds, gh_exact, FiniteMetricSpace, GenSpec,
    SolverError, SolverOptions, ToleranceConfig,
};
use serde::Serialize;

/// Exact Gromov-Hausdorff distances and Borsuk numbers of finite metric spaces.
#[derive(Parser)]
#[command(name = "ghborsuk", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Relative tolerance for equality decisions (times the diameter).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_eq: f64,
    /// Relative tolerance for symmetry and triangle checks (times the largest entry).
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_tri: f64,
    /// Search threads.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for `verify` (required there) and `gen` (overrides the spec's seed).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Trial count override for `verify`.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Largest point count the exhaustive search accepts.
    #[arg(long, global = true, default_value_t = 10)]
    max_points: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a distance matrix against the metric axioms.
    Validate { file: PathBuf },
    /// Size, diameter, distance spectrum and diameter-graph edge count.
    Info { file: PathBuf },
    /// Gromov-Hausdorff distance between two spaces.
    Gh { x: PathBuf, y: PathBuf },
    /// Borsuk number with an optimal partition.
    Borsuk { file: PathBuf },
    /// Write the m-point space with all distances equal to LAMBDA.
    Delta {
        m: usize,
        lambda: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a generated space, SPEC = kind:n[:dim][:scale][:seed].
    Gen {
        spec: GenSpec,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite (A1..A14, an alias, or all).
    Verify { suite: String },
}

/// An error that ends the run with the given exit code.
struct Failure {
    code: u8,
    name: &'static str,
    message: String,
}

impl Failure {
    fn usage(name: &'static str, message: impl Into<String>) -> Self {
        Self {
            code: 2,
            name,
            message: message.into(),
        }
    }

    fn compute(name: &'static str, message: impl ToString) -> Self {
        Self {
            code: 1,
            name,
            message: message.to_string(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Self::compute(e.name(), &e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}: {}", f.name, f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let tol = ToleranceConfig::new(cli.tol_tri, cli.tol_eq).map_err(|e| Failure::usage(e.name(), e.to_string()))?;
    if cli.workers == 0 {
        return Err(Failure::usage("InvalidOptions", "--workers must be at least 1"));
    }
    match &cli.cmd {
        Cmd::Validate { file } => validate(cli, file, &tol),
        Cmd::Info { file } => info(cli, file, &tol),
        Cmd::Gh { x, y } => gh(cli, x, y, &tol),
        Cmd::Borsuk { file } => {
            let x = read_space(file, &tol)?;
            let r = borsuk_number(&x, &tol).map_err(|e| Failure::compute(e.name(), &e))?;
            let j = BorsukJson::from(&r);
            emit(cli, &j, j.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Delta { m, lambda, output } => {
            let s = delta_simplex(*m, *lambda).map_err(|e| Failure::usage(e.name(), e.to_string()))?;
            write_space(cli, &s, output.as_deref())
        }
        Cmd::Gen { spec, output } => {
            let mut spec = spec.clone();
            if let Some(seed) = cli.seed {
                spec.seed = seed;
            }
            let s = generate(&spec).map_err(|e| Failure::usage(e.name(), e.to_string()))?;
            write_space(cli, &s, output.as_deref())
        }
        Cmd::Verify { suite } => verify(cli, suite, &tol),
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: String) {
    match cli.format {
        Format::Json => println!("{}", to_json(value)),
        Format::Text => print!("{text}"),
    }
}

#[derive(Serialize)]
struct ValidationJson {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diameter: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
}

fn validate(cli: &Cli, file: &Path, tol: &ToleranceConfig) -> Result<ExitCode, Failure> {
    match read_space(file, tol) {
        Ok(s) => {
            let text = format!("valid    {} points, diameter {}\n", s.len(), s.diameter());
            let j = ValidationJson {
                valid: true,
                n: Some(s.len()),
                diameter: Some(s.diameter()),
                error: None,
                message: None,
            };
            emit(cli, &j, text);
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            let text = format!("invalid  {}: {e}\n", e.name());
            let j = ValidationJson {
                valid: false,
                n: None,
                diameter: None,
                error: Some(e.name()),
                message: Some(e.to_string()),
            };
            emit(cli, &j, text);
            Ok(ExitCode::from(1))
        }
    }
}

#[derive(Serialize)]
struct SpectrumEntry {
    distance: f64,
    count: usize,
}

#[derive(Serialize)]
struct InfoJson {
    n: usize,
    diameter: f64,
    spectrum: Vec<SpectrumEntry>,
    diameter_graph_edges: usize,
}

/// Distinct off-diagonal distances, merging values within `eps_eq * diam` of
/// the smallest member of their group.
fn spectrum(s: &FiniteMetricSpace, tol: &ToleranceConfig) -> Vec<SpectrumEntry> {
    let slack = tol.eps_eq * s.diameter();
    let mut d: Vec<f64> = (0..s.len())
        .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
        .map(|(i, j)| s.dist(i, j))
        .collect();
    d.sort_by(f64::total_cmp);
    let mut out: Vec<SpectrumEntry> = Vec::new();
    for v in d {
        match out.last_mut() {
            Some(e) if v - e.distance <= slack => e.count += 1,
            _ => out.push(SpectrumEntry { distance: v, count: 1 }),
        }
    }
    out
}

fn info(cli: &Cli, file: &Path, tol: &ToleranceConfig) -> Result<ExitCode, Failure> {
    let s = read_space(file, tol)?;
    let edges = if s.len() < 2 {
        0
    } else {
        diameter_graph(&s, tol)
            .map_err(|e| Failure::compute(e.name(), &e))?
            .edges()
            .len()
    };
    let j = InfoJson {
        n: s.len(),
        diameter: s.diameter(),
        spectrum: spectrum(&s, tol),
        diameter_graph_edges: edges,
    };
    let mut text = format!("points   {}\ndiameter {}\nedges    {}\nspectrum\n", j.n, j.diameter, edges);
    for e in &j.spectrum {
        text.push_str(&format!("  {} x{}\n", e.distance, e.count));
    }
    emit(cli, &j, text);
    Ok(ExitCode::SUCCESS)
}

fn gh(cli: &Cli, xp: &Path, yp: &Path, tol: &ToleranceConfig) -> Result<ExitCode, Failure> {
    let x = read_space(xp, tol)?;
    let y = read_space(yp, tol)?;
    let opts = SolverOptions {
        max_points: cli.max_points,
        worker_count: cli.workers,
        tol: *tol,
        ..SolverOptions::default()
    };
    let j = match gh_exact(&x, &y, &opts) {
        Ok(r) => GhJson::from(&r),
        Err(e @ SolverError::TooLarge { .. }) => {
            let (lo, hi) = gh_bounds(&x, &y);
            GhJson::bounds_only(lo, hi, format!("{}: {e}; reporting bounds only", e.name()))
        }
        Err(e) => return Err(Failure::usage(e.name(), e.to_string())),
    };
    emit(cli, &j, j.to_text());
    Ok(ExitCode::SUCCESS)
}

fn write_space(cli: &Cli, s: &FiniteMetricSpace, output: Option<&Path>) -> Result<ExitCode, Failure> {
    let by_flag = match cli.format {
        Format::Json => MatrixFormat::Json,
        Format::Text => MatrixFormat::Csv,
    };
    let format = output.and_then(MatrixFormat::from_path).unwrap_or(by_flag);
    let mut body = render(s, format);
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match output {
        None => print!("{body}"),
        Some(p) => std::fs::write(p, body).map_err(|source| {
            Failure::from(IoError::Io {
                path: p.display().to_string(),
                source,
            })
        })?,
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(cli: &Cli, name: &str, tol: &ToleranceConfig) -> Result<ExitCode, Failure> {
    let suites = Suite::parse_selection(name).map_err(|e| Failure::usage("UnknownSuite", e.to_string()))?;
    let seed = cli
        .seed
        .ok_or_else(|| Failure::usage("MissingSeed", "verify needs an explicit --seed"))?;
    if cli.trials == Some(0) {
        return Err(Failure::usage("InvalidOptions", "--trials must be at least 1"));
    }
    let cfg = SuiteConfig {
        seed,
        trials: cli.trials,
        workers: cli.workers,
        tol: *tol,
    };
    let report = run_suites(&suites, &cfg);
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
