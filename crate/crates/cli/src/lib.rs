//! Command-line front end: tables of the strip map and the assembled
//! potential, spectrum reports and the verification pipeline.
//!
//! Exit codes: 0 success, 1 gate failure, 2 configuration error,
//! 3 inversion failure, 4 solver failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use natanzon::conformal::strip_image;
use natanzon::ginocchio::{potential_on_x_grid, AssemblyVariant, GinocchioError};
use natanzon::pdmsolver::{default_domain, verify_spectrum, PdmError, VerifyOptions};
use natanzon::verify::{run_verify, VerifyConfig, VerifyReport};
use natanzon::{GinocchioSpec, Grid, MassProfile, OrderingParams, SpectrumReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_GATE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INVERSION: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("inversion failure: {0}")]
    Inversion(String),
    #[error("solver failure: {0}")]
    Solver(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Inversion(_) => EXIT_INVERSION,
            CliError::Solver(_) => EXIT_SOLVER,
        }
    }
}

impl From<GinocchioError> for CliError {
    fn from(e: GinocchioError) -> Self {
        match e {
            GinocchioError::MaxIterations { .. } => CliError::Inversion(e.to_string()),
            GinocchioError::InvalidGamma(_) | GinocchioError::InvalidJ(_) | GinocchioError::Mass(_) => {
                CliError::Config(e.to_string())
            }
            other => CliError::Solver(other.to_string()),
        }
    }
}

impl From<PdmError> for CliError {
    fn from(e: PdmError) -> Self {
        match e {
            PdmError::Ginocchio(g) => g.into(),
            PdmError::NonpositiveMass { .. } => CliError::Config(e.to_string()),
            other => CliError::Solver(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "natanzon", version, about = "Natanzon and Ginocchio potentials with position-dependent mass")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Image of the band |Re z| ≤ π/4 under the strip-to-disk map
    Map,
    /// Table of the assembled potential on an x grid
    Potential,
    /// Closed-form, quantization-condition and numeric spectra
    Spectrum,
    /// Run the property suites of every module
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Flags shared by every command. Each one overrides the matching key of the
/// `--config` file.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// JSON file with the same keys as the flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub gamma: Option<f64>,
    #[arg(long, global = true)]
    pub j: Option<f64>,
    /// η,ε (ρ = −1 − η − ε) or η,ε,ρ
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub ordering: Option<String>,
    /// constant:c, rational:a or exponential-well:b
    #[arg(long, global = true)]
    pub mass: Option<String>,
    /// xmin,xmax,N (for `map`: Im z range and lattice size)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// v+um, v-um, v+um+vm or v
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub assembly: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// name=value threshold override; repeatable
    #[arg(long = "tol", global = true)]
    pub tol: Vec<String>,
    /// Restrict `verify` to a suite; repeatable or comma separated
    #[arg(long, global = true)]
    pub only: Vec<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output file; standard output when absent
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub gamma: Option<f64>,
    pub j: Option<f64>,
    pub ordering: Option<String>,
    pub mass: Option<String>,
    pub grid: Option<String>,
    pub assembly: Option<String>,
    pub format: Option<Format>,
    #[serde(default)]
    pub tol: BTreeMap<String, f64>,
    #[serde(default)]
    pub only: Vec<String>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

/// Grid given as `xmin,xmax,N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

/// Validated configuration for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub gamma: f64,
    pub j: f64,
    pub ordering: OrderingParams,
    pub mass: MassProfile,
    pub grid: Option<GridSpec>,
    pub assembly: AssemblyVariant,
    pub format: Format,
    pub tolerances: BTreeMap<String, f64>,
    pub only: Vec<String>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

fn config_error(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn parse_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| config_error(format!("{what}: cannot parse '{s}' as a number"))))
        .collect()
}

pub fn parse_ordering(text: &str) -> Result<OrderingParams, CliError> {
    let v = parse_list(text, "--ordering")?;
    match v.as_slice() {
        [eta, eps] => Ok(OrderingParams::from_eta_epsilon(*eta, *eps)),
        [eta, eps, rho] => OrderingParams::new(*eta, *eps, *rho).map_err(|e| config_error(e.to_string())),
        _ => Err(config_error("--ordering expects η,ε or η,ε,ρ with η + ε + ρ = −1")),
    }
}

pub fn parse_mass(text: &str) -> Result<MassProfile, CliError> {
    let (name, param) = match text.split_once(':') {
        Some((n, p)) => (n.trim(), Some(p.trim())),
        None => (text.trim(), None),
    };
    let value = |default: f64| -> Result<f64, CliError> {
        param.map_or(Ok(default), |p| p.parse::<f64>().map_err(|_| config_error(format!("--mass: bad parameter '{p}'"))))
    };
    let profile = match name {
        "constant" | "unit" => MassProfile::constant(value(1.0)?),
        "rational" => MassProfile::rational(value(2.0)?),
        "exponential-well" | "exponential_well" => MassProfile::exponential_well(value(0.5)?),
        other => {
            return Err(config_error(format!(
                "--mass: unknown profile '{other}' (expected constant:c, rational:a or exponential-well:b)"
            )))
        }
    };
    profile.map_err(|e| config_error(e.to_string()))
}

pub fn parse_grid(text: &str) -> Result<GridSpec, CliError> {
    let v = parse_list(text, "--grid")?;
    match v.as_slice() {
        [min, max, n] if *n >= 3.0 && n.fract() == 0.0 && min < max => Ok(GridSpec { min: *min, max: *max, n: *n as usize }),
        _ => Err(config_error("--grid expects xmin,xmax,N with xmin < xmax and integer N ≥ 3")),
    }
}

fn parse_tol(entries: &[String]) -> Result<BTreeMap<String, f64>, CliError> {
    let mut out = BTreeMap::new();
    for e in entries {
        let (name, value) = e.split_once('=').ok_or_else(|| config_error(format!("--tol expects name=value, got '{e}'")))?;
        let v: f64 = value.trim().parse().map_err(|_| config_error(format!("--tol: cannot parse '{value}'")))?;
        if !(v >= 0.0) {
            return Err(config_error(format!("--tol: '{name}' must be non-negative")));
        }
        out.insert(name.trim().to_string(), v);
    }
    Ok(out)
}

impl RunConfig {
    /// Merges the optional config file with the flags (flags win) and validates.
    pub fn resolve(flags: &Flags) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str::<FileConfig>(&text).map_err(|e| config_error(format!("{}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        let gamma = flags.gamma.or(file.gamma).unwrap_or(1.0);
        let j = flags.j.or(file.j).unwrap_or(2.0);
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(config_error(format!("gamma must be positive, got {gamma}")));
        }
        if !(j >= 0.0 && j.is_finite()) {
            return Err(config_error(format!("j must be non-negative, got {j}")));
        }
        let ordering = parse_ordering(flags.ordering.as_deref().or(file.ordering.as_deref()).unwrap_or("0,-1"))?;
        let mass = parse_mass(flags.mass.as_deref().or(file.mass.as_deref()).unwrap_or("constant:1"))?;
        let grid = flags.grid.as_deref().or(file.grid.as_deref()).map(parse_grid).transpose()?;
        let assembly_tag = flags.assembly.as_deref().or(file.assembly.as_deref()).unwrap_or("v+um");
        let assembly = AssemblyVariant::from_tag(assembly_tag)
            .ok_or_else(|| config_error(format!("--assembly: unknown variant '{assembly_tag}' (v+um, v-um, v+um+vm, v)")))?;
        let mut tolerances = file.tol.clone();
        tolerances.extend(parse_tol(&flags.tol)?);
        let only_source = if flags.only.is_empty() { &file.only } else { &flags.only };
        let only = only_source.iter().flat_map(|s| s.split(',')).map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        Ok(Self {
            gamma,
            j,
            ordering,
            mass,
            grid,
            assembly,
            format: flags.format.or(file.format).unwrap_or_default(),
            tolerances,
            only,
            seed: flags.seed.or(file.seed).unwrap_or(0),
            out: flags.out.clone().or(file.out),
        })
    }

    fn x_grid(&self, default_points: usize) -> Result<Grid, CliError> {
        let spec = self.grid.unwrap_or_else(|| {
            let l = default_domain(&self.mass);
            GridSpec { min: -l, max: l, n: default_points }
        });
        Grid::new(spec.min, spec.max, spec.n).map_err(|e| config_error(e.to_string()))
    }
}

/// Text produced by a command together with its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Solver(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct MapRow {
    z_re: f64,
    z_im: f64,
    w_re: f64,
    w_im: f64,
    residual: f64,
}

/// Image of the band under the strip-to-disk map, with the Cauchy–Riemann
/// residual of every sample. `--grid a,b,N` sets `Im z ∈ [a, b]` and an
/// `N × N` lattice (default `−2,2,21`).
pub fn cmd_map(config: &RunConfig) -> Result<Outcome, CliError> {
    let spec = config.grid.unwrap_or(GridSpec { min: -2.0, max: 2.0, n: 21 });
    let samples = strip_image(spec.n, spec.min, spec.max, spec.n, 1e-3);
    let rows: Vec<MapRow> = samples
        .iter()
        .map(|s| MapRow { z_re: s.z.re, z_im: s.z.im, w_re: s.w.re, w_im: s.w.im, residual: s.residual })
        .collect();
    let text = match config.format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut out = String::from("z_re,z_im,w_re,w_im,residual\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{},{},{}", num(r.z_re), num(r.z_im), num(r.w_re), num(r.w_im), num(r.residual));
            }
            out
        }
    };
    Ok(Outcome { text, exit_code: EXIT_OK })
}

/// Columns `x, m, mu, u, z, V_hyp, V_poly, Um, V_total` of the assembled potential.
pub fn cmd_potential(config: &RunConfig) -> Result<Outcome, CliError> {
    let spec = GinocchioSpec::new(config.gamma, config.j)?;
    let grid = config.x_grid(801)?;
    let rows = potential_on_x_grid(&spec, &config.mass, &config.ordering, &grid, config.assembly)?;
    let text = match config.format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut out = String::from("x,m,mu,u,z,V_hyp,V_poly,Um,V_total\n");
            for r in &rows {
                let cols = [r.x, r.m, r.mu, r.u, r.z, r.v_hyp, r.v_poly, r.um, r.v_total].map(num);
                let _ = writeln!(out, "{}", cols.join(","));
            }
            out
        }
    };
    Ok(Outcome { text, exit_code: EXIT_OK })
}

pub const SPECTRUM_GATES: [(&str, f64); 3] = [("eq27_vs_eq34", 1e-9), ("mass_independence", 2e-3), ("convergence", 1e-3)];

#[derive(Debug, Clone, Serialize)]
pub struct Gate {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub passed: bool,
}

#[derive(Serialize)]
struct SpectrumOutput<'a> {
    #[serde(flatten)]
    report: &'a SpectrumReport,
    gates: &'a [Gate],
}

/// Evaluates the spectrum gates of a report against the configured thresholds.
pub fn spectrum_gates(report: &SpectrumReport, tolerances: &BTreeMap<String, f64>) -> Result<Vec<Gate>, CliError> {
    for name in tolerances.keys() {
        if !SPECTRUM_GATES.iter().any(|(n, _)| n == name) {
            return Err(config_error(format!("--tol: unknown spectrum gate '{name}' (eq27_vs_eq34, mass_independence, convergence)")));
        }
    }
    let convergence = report.residuals.numeric_convergence.iter().copied().fold(0.0, f64::max);
    let values = [report.residuals.max_eq27_vs_eq34, report.mass_independence.max_difference, convergence];
    Ok(SPECTRUM_GATES
        .iter()
        .zip(values)
        .map(|((name, default), value)| {
            let threshold = tolerances.get(*name).copied().unwrap_or(*default);
            Gate { name: name.to_string(), value, threshold, passed: value <= threshold }
        })
        .collect())
}

pub fn cmd_spectrum(config: &RunConfig) -> Result<Outcome, CliError> {
    let spec = GinocchioSpec::new(config.gamma, config.j)?;
    let grid = config.x_grid(2001)?;
    let report = verify_spectrum(&spec, &config.mass, &config.ordering, config.assembly, &grid, VerifyOptions::default())?;
    let gates = spectrum_gates(&report, &config.tolerances)?;
    let exit_code = if gates.iter().all(|g| g.passed) { EXIT_OK } else { EXIT_GATE };
    let text = match config.format {
        Format::Json => to_json(&SpectrumOutput { report: &report, gates: &gates })?,
        Format::Csv => {
            let mut out = String::from("level,numeric,quantization_roots,closed_form\n");
            let levels = report.energies_numeric.len().max(report.energies_eq34.len());
            let cell = |v: Option<f64>| v.map(num).unwrap_or_default();
            for n in 0..levels {
                let _ = writeln!(
                    out,
                    "{n},{},{},{}",
                    cell(report.energies_numeric.get(n).copied()),
                    cell(report.energies_eq27.get(n).copied().flatten()),
                    cell(report.energies_eq34.get(n).copied())
                );
            }
            out
        }
    };
    Ok(Outcome { text, exit_code })
}

/// Builds the verification settings from a run configuration.
pub fn verify_config(config: &RunConfig) -> VerifyConfig {
    VerifyConfig {
        seed: config.seed,
        only: config.only.clone(),
        tolerances: config.tolerances.clone(),
        spectrum_points: config.grid.map_or(2001, |g| g.n),
    }
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    let report: VerifyReport = run_verify(&verify_config(config)).map_err(|e| config_error(e.to_string()))?;
    let exit_code = if report.passed { EXIT_OK } else { EXIT_GATE };
    let text = match config.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut out = String::from("suite,check,hard,passed,value,threshold\n");
            for s in &report.suites {
                for c in &s.checks {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        s.suite,
                        c.name,
                        c.hard,
                        c.passed,
                        c.value.map(num).unwrap_or_default(),
                        c.threshold.map(num).unwrap_or_default()
                    );
                }
            }
            out
        }
    };
    Ok(Outcome { text, exit_code })
}

/// Resolves the configuration and runs one command. Errors become a
/// diagnostic on standard error and the matching exit code.
pub fn run(cli: &Cli) -> Result<(Outcome, Option<PathBuf>), CliError> {
    let config = RunConfig::resolve(&cli.flags)?;
    let outcome = match cli.command {
        Command::Map => cmd_map(&config)?,
        Command::Potential => cmd_potential(&config)?,
        Command::Spectrum => cmd_spectrum(&config)?,
        Command::Verify => cmd_verify(&config)?,
    };
    Ok((outcome, config.out))
}
