//! Command-line front end.
//!
//! Five subcommands: `delay`, `spectrum`, `mean-mass`, `simulate` and
//! `verify`. All output is machine readable (CSV or JSON, see
//! [`output::OutputRecord`]) with the complete resolved parameter set
//! echoed into every file.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 numerical failure.

mod config_file;
mod grid_spec;
pub mod output;

pub use grid_spec::{GridScale, GridSpec};

use crate::dynamics::{self, DynamicsError, SimulationConfig};
use crate::quadrature::{QuadratureConfig, QuadratureError};
use crate::scattering::{MirrorModel, ModelError};
use crate::spectra::{self, SpectraError, SpectrumComponent, SpectrumMethod};
use crate::verify::{self, Overrides, Suite};
use clap::{Args, Parser, Subcommand, ValueEnum};
use config_file::{merge, ConfigMap};
use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Numerical(_) | Self::Io(_) => 3,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Quadrature(q) => q.into(),
            SpectraError::InvalidComponent { .. }
            | SpectraError::InvalidMethod { .. }
            | SpectraError::InvalidCutoff(_)
            | SpectraError::OutsideSeriesRange { .. } => Self::Usage(e.to_string()),
            SpectraError::InvalidSamples(_) => Self::Numerical(e.to_string()),
        }
    }
}

impl From<QuadratureError> for CliError {
    fn from(e: QuadratureError) -> Self {
        match e {
            QuadratureError::InvalidConfig | QuadratureError::InvalidInterval { .. } => {
                Self::Usage(e.to_string())
            }
            QuadratureError::NonFiniteSample { .. } | QuadratureError::NonConvergence { .. } => {
                Self::Numerical(e.to_string())
            }
        }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::NonPowerOfTwo(_)
            | DynamicsError::InvalidTimeStep(_)
            | DynamicsError::InvalidBareMass(_)
            | DynamicsError::InvalidSteps
            | DynamicsError::InvalidBand { .. }
            | DynamicsError::ResolutionBound { .. }
            | DynamicsError::InvalidSegmentLength { .. } => Self::Usage(e.to_string()),
            DynamicsError::NonpositiveMass { .. } | DynamicsError::SeriesLengthMismatch => {
                Self::Numerical(e.to_string())
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "vacuum-mirror",
    version,
    about = "Vacuum force and mass fluctuation spectra of a point mirror, \
             with noise-driven relativistic trajectories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reflection delay and phase shift over a frequency grid
    Delay(DelayArgs),
    /// Correlation spectra over a frequency grid
    Spectrum(SpectrumArgs),
    /// Cutoff-regularized mean induced mass, both evaluation routes
    MeanMass(MeanMassArgs),
    /// Integrate a noise-driven relativistic trajectory
    Simulate(SimulateArgs),
    /// Run invariant verification suites
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    fn as_str(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format '{other}' (csv|json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComponentArg {
    F0f0,
    F1f1,
    F0f1,
    Mass,
    Field,
}

impl ComponentArg {
    fn to_component(self) -> SpectrumComponent {
        match self {
            Self::F0f0 => SpectrumComponent::F0F0,
            Self::F1f1 => SpectrumComponent::F1F1,
            Self::F0f1 => SpectrumComponent::F0F1,
            Self::Mass => SpectrumComponent::Mass,
            Self::Field => SpectrumComponent::Field,
        }
    }
}

impl FromStr for ComponentArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f0f0" => Ok(Self::F0f0),
            "f1f1" => Ok(Self::F1f1),
            "f0f1" => Ok(Self::F0f1),
            "mass" => Ok(Self::Mass),
            "field" => Ok(Self::Field),
            other => Err(format!(
                "unknown component '{other}' (f0f0|f1f1|f0f1|mass|field)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Quad,
    Closed,
    Conv,
    Asym,
}

impl MethodArg {
    fn to_method(self) -> SpectrumMethod {
        match self {
            Self::Quad => SpectrumMethod::Quadrature,
            Self::Closed => SpectrumMethod::ClosedForm,
            Self::Conv => SpectrumMethod::Convolution,
            Self::Asym => SpectrumMethod::Asymptote,
        }
    }
}

impl FromStr for MethodArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quad" => Ok(Self::Quad),
            "closed" => Ok(Self::Closed),
            "conv" => Ok(Self::Conv),
            "asym" => Ok(Self::Asym),
            other => Err(format!("unknown method '{other}' (quad|closed|conv|asym)")),
        }
    }
}

/// Flags shared by the table-producing commands.
#[derive(Debug, Args)]
struct CommonOpts {
    /// Output format (csv or json)
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key = value config file; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

impl CommonOpts {
    fn load_config(&self) -> Result<ConfigMap, CliError> {
        match &self.config {
            Some(path) => ConfigMap::load(path),
            None => Ok(ConfigMap::empty()),
        }
    }

    fn format(&self, config: &ConfigMap) -> Result<OutputFormat, CliError> {
        Ok(merge(self.format, config, "format")?.unwrap_or(OutputFormat::Csv))
    }
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    s.parse()
}

fn parse_band(s: &str) -> Result<Band, String> {
    s.parse()
}

/// Noise band `lo:hi` in angular frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Band {
    lo: f64,
    hi: f64,
}

impl FromStr for Band {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("band '{s}' must be lo:hi"))?;
        let lo: f64 = lo
            .parse()
            .map_err(|_| format!("band minimum '{lo}' is not a number"))?;
        let hi: f64 = hi
            .parse()
            .map_err(|_| format!("band maximum '{hi}' is not a number"))?;
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

#[derive(Debug, Args)]
struct DelayArgs {
    /// Reflection cutoff frequency
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    omega_c: Option<f64>,
    /// Frequency grid min:max:points[:log|lin]
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    grid: Option<GridSpec>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    /// Spectrum component
    #[arg(long, value_enum)]
    component: Option<ComponentArg>,
    /// Evaluation method (defaults: quad for forces, closed for mass/field)
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Reflection cutoff frequency
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    omega_c: Option<f64>,
    /// Action scale
    #[arg(long, allow_negative_numbers = true)]
    hbar: Option<f64>,
    /// Frequency grid min:max:points[:log|lin]
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    grid: Option<GridSpec>,
    /// Relative quadrature tolerance
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Debug, Args)]
struct MeanMassArgs {
    /// Reflection cutoff frequency
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    omega_c: Option<f64>,
    /// Action scale
    #[arg(long, allow_negative_numbers = true)]
    hbar: Option<f64>,
    /// UV cutoff of the mean-mass integral (required, must be positive)
    #[arg(long, allow_negative_numbers = true)]
    cutoff: Option<f64>,
    /// Relative quadrature tolerance
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Reflection cutoff frequency
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    omega_c: Option<f64>,
    /// Action scale
    #[arg(long, allow_negative_numbers = true)]
    hbar: Option<f64>,
    /// Bare mass of the scatterer
    #[arg(long = "mass-bare", allow_negative_numbers = true)]
    mass_bare: Option<f64>,
    /// Time step (default 0.1/omega_max of the band)
    #[arg(long, allow_negative_numbers = true)]
    dt: Option<f64>,
    /// Number of integration steps
    #[arg(long)]
    steps: Option<usize>,
    /// Noise seed
    #[arg(long)]
    seed: Option<u64>,
    /// Enable the fluctuating-mass channel
    #[arg(long = "mass-channel")]
    mass_channel: bool,
    /// Noise band lo:hi in angular frequency
    #[arg(long, value_parser = parse_band)]
    band: Option<Band>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suite to run
    #[arg(long)]
    suite: Option<String>,
    /// Reflection cutoff frequency of the model under test
    #[arg(long = "omega-c", allow_negative_numbers = true)]
    omega_c: Option<f64>,
    /// Action scale
    #[arg(long, allow_negative_numbers = true)]
    hbar: Option<f64>,
    /// Threshold override check=value; repeatable
    #[arg(long = "tol", value_parser = parse_override)]
    tol: Vec<(String, f64)>,
    #[command(flatten)]
    common: CommonOpts,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("tolerance override '{s}' must be check=value"))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("tolerance override value '{value}' is not a number"))?;
    Ok((name.trim().to_string(), value))
}

/// Parse arguments, dispatch, and translate every failure into the
/// documented exit-code contract.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Delay(args) => cmd_delay(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::MeanMass(args) => cmd_mean_mass(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        // A closed pipe on the reading side (e.g. `... | head`) is a
        // normal way for output to end, not a failure of ours.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn model_from(
    omega_c: Option<f64>,
    hbar: Option<f64>,
    config: &ConfigMap,
) -> Result<MirrorModel, CliError> {
    let omega_c = merge(omega_c, config, "omega-c")?.unwrap_or(1.0);
    let hbar = merge(hbar, config, "hbar")?.unwrap_or(1.0);
    Ok(MirrorModel::with_hbar(omega_c, hbar)?)
}

fn grid_or_default(
    grid: Option<GridSpec>,
    config: &ConfigMap,
    model: &MirrorModel,
) -> Result<GridSpec, CliError> {
    let merged = match grid {
        Some(g) => Some(g),
        None => match config.get("grid") {
            Some(raw) => Some(
                raw.parse::<GridSpec>()
                    .map_err(|e| CliError::Usage(format!("config key 'grid': {e}")))?,
            ),
            None => None,
        },
    };
    Ok(merged.unwrap_or(GridSpec {
        min: 1e-3 * model.omega_c(),
        max: 1e3 * model.omega_c(),
        points: 400,
        scale: GridScale::Log,
    }))
}

fn write_record(
    record: &output::OutputRecord,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut sink = std::io::BufWriter::new(sink);
    match format {
        OutputFormat::Csv => record.write_csv(&mut sink)?,
        OutputFormat::Json => record.write_json(&mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

fn cmd_delay(args: DelayArgs) -> Result<i32, CliError> {
    let config = args.common.load_config()?;
    let model = model_from(args.omega_c, None, &config)?;
    let grid = grid_or_default(args.grid, &config, &model)?;
    let format = args.common.format(&config)?;

    let freqs = grid.materialize();
    let delays: Vec<f64> = freqs.iter().map(|&w| model.reflection_delay(w)).collect();
    let phases: Vec<f64> = freqs.iter().map(|&w| model.phase_shift(w)).collect();

    let mut params = BTreeMap::new();
    params.insert("omega-c".into(), model.omega_c().to_string());
    params.insert("grid".into(), grid.canonical());
    params.insert("format".into(), format.as_str().into());
    let mut record = output::OutputRecord::new("delay", params);
    record.push_column("omega", freqs);
    record.push_column("reflection_delay", delays);
    record.push_column("phase_shift", phases);
    write_record(&record, format, &args.common.out)?;
    Ok(0)
}

fn default_method(component: SpectrumComponent) -> MethodArg {
    match component {
        SpectrumComponent::F0F0 | SpectrumComponent::F1F1 | SpectrumComponent::F0F1 => {
            MethodArg::Quad
        }
        SpectrumComponent::Mass | SpectrumComponent::Field => MethodArg::Closed,
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<i32, CliError> {
    let config = args.common.load_config()?;
    let model = model_from(args.omega_c, args.hbar, &config)?;
    let grid = grid_or_default(args.grid, &config, &model)?;
    let format = args.common.format(&config)?;
    let component = merge(args.component, &config, "component")?
        .ok_or_else(|| CliError::Usage("--component is required".into()))?
        .to_component();
    let method = merge(args.method, &config, "method")?
        .unwrap_or_else(|| default_method(component))
        .to_method();
    let tol = merge(args.tol, &config, "tol")?.unwrap_or(1e-10);
    if !tol.is_finite() || tol <= 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {tol}"
        )));
    }
    spectra::validate_pairing(component, method)?;

    let cfg = QuadratureConfig::with_rel_tol(tol);
    let freqs = grid.materialize();
    let samples = spectra::evaluate_grid(&model, component, method, &freqs, &cfg)?;

    let mut params = BTreeMap::new();
    params.insert("omega-c".into(), model.omega_c().to_string());
    params.insert("hbar".into(), model.hbar().to_string());
    params.insert("component".into(), component.as_str().into());
    params.insert(
        "method".into(),
        match method {
            SpectrumMethod::Quadrature => "quad",
            SpectrumMethod::ClosedForm => "closed",
            SpectrumMethod::Convolution => "conv",
            SpectrumMethod::Asymptote => "asym",
        }
        .into(),
    );
    params.insert("grid".into(), grid.canonical());
    params.insert("tol".into(), tol.to_string());
    params.insert("format".into(), format.as_str().into());
    let mut record = output::OutputRecord::new("spectrum", params);
    record.push_column("omega", samples.frequencies().to_vec());
    record.push_column("value", samples.values().to_vec());
    record.push_column("error_estimate", samples.error_estimates().to_vec());
    write_record(&record, format, &args.common.out)?;
    Ok(0)
}

fn cmd_mean_mass(args: MeanMassArgs) -> Result<i32, CliError> {
    let config = args.common.load_config()?;
    let model = model_from(args.omega_c, args.hbar, &config)?;
    let format = args.common.format(&config)?;
    let cutoff = merge(args.cutoff, &config, "cutoff")?.ok_or_else(|| {
        CliError::Usage("--cutoff is required: the integral diverges without one".into())
    })?;
    let tol = merge(args.tol, &config, "tol")?.unwrap_or(1e-10);
    if !tol.is_finite() || tol <= 0.0 {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {tol}"
        )));
    }

    let cfg = QuadratureConfig::with_rel_tol(tol);
    let analytic = spectra::mean_induced_mass_analytic(&model, cutoff)?;
    let quadrature = spectra::mean_induced_mass(&model, cutoff, &cfg)?;

    let mut params = BTreeMap::new();
    params.insert("omega-c".into(), model.omega_c().to_string());
    params.insert("hbar".into(), model.hbar().to_string());
    params.insert("cutoff".into(), cutoff.to_string());
    params.insert("tol".into(), tol.to_string());
    params.insert("format".into(), format.as_str().into());
    let mut record = output::OutputRecord::new("mean-mass", params);
    record.push_column("analytic", vec![analytic]);
    record.push_column("quadrature", vec![quadrature]);
    record.push_column("abs_difference", vec![(analytic - quadrature).abs()]);
    write_record(&record, format, &args.common.out)?;
    Ok(0)
}

fn cmd_simulate(args: SimulateArgs) -> Result<i32, CliError> {
    let config = args.common.load_config()?;
    let model = model_from(args.omega_c, args.hbar, &config)?;
    let format = args.common.format(&config)?;
    let band = merge(args.band, &config, "band")?.unwrap_or(Band {
        lo: 0.0,
        hi: 5.0 * model.omega_c(),
    });
    let dt = match merge(args.dt, &config, "dt")? {
        Some(dt) => dt,
        None if band.hi > 0.0 => 0.1 / band.hi,
        None => 0.05,
    };
    let sim = SimulationConfig {
        model,
        m_bare: merge(args.mass_bare, &config, "mass-bare")?.unwrap_or(1.0),
        dt,
        steps: merge(args.steps, &config, "steps")?.unwrap_or(4096),
        seed: merge(args.seed, &config, "seed")?.unwrap_or(0),
        mass_channel: args.mass_channel
            || merge(None::<bool>, &config, "mass-channel")?.unwrap_or(false),
        noise_band: (band.lo, band.hi),
    };
    sim.validate()?;

    let trajectory = dynamics::run_trajectory(&sim)?;

    let mut params = BTreeMap::new();
    params.insert("omega-c".into(), model.omega_c().to_string());
    params.insert("hbar".into(), model.hbar().to_string());
    params.insert("mass-bare".into(), sim.m_bare.to_string());
    params.insert("dt".into(), sim.dt.to_string());
    params.insert("steps".into(), sim.steps.to_string());
    params.insert("seed".into(), sim.seed.to_string());
    params.insert("mass-channel".into(), sim.mass_channel.to_string());
    params.insert("band".into(), band.to_string());
    params.insert("format".into(), format.as_str().into());

    let n = trajectory.states.len();
    let mut cols: [Vec<f64>; 6] = Default::default();
    for s in &trajectory.states {
        cols[0].push(s.t);
        cols[1].push(s.q);
        cols[2].push(s.p);
        cols[3].push(s.m);
        cols[4].push(s.velocity());
        cols[5].push(s.energy());
    }
    let mut record = output::OutputRecord::new("simulate", params.clone());
    for (name, values) in ["t", "q", "p", "m", "v", "e"].iter().zip(cols) {
        record.push_column(name, values);
    }
    write_record(&record, format, &args.common.out)?;

    let d = &trajectory.diagnostics;
    let summary = serde_json::json!({
        "schema_version": output::SCHEMA_VERSION,
        "command": "simulate-summary",
        "parameters": params,
        "states": n,
        "diagnostics": {
            "max_velocity": d.max_velocity,
            "max_dispersion_residual": d.max_dispersion_residual,
            "momentum_variance": d.momentum_variance,
            "mass_mean": d.mass_mean,
            "mass_mean_predicted": d.mass_mean_predicted,
            "force_periodogram_ratio": d.force_periodogram_ratio,
        },
    });
    // The summary shares the trajectory stream only when that stream went
    // to a file; otherwise it moves aside to stderr.
    if args.common.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let config = args.common.load_config()?;
    let model = model_from(args.omega_c, args.hbar, &config)?;
    let format = args.common.format(&config)?;
    let suite: Suite = merge(
        args.suite
            .map(|s| s.parse::<Suite>())
            .transpose()
            .map_err(CliError::Usage)?,
        &config,
        "suite",
    )?
    .unwrap_or(Suite::All);

    let mut overrides = Overrides::new();
    for (name, value) in &args.tol {
        overrides.insert(name.clone(), *value);
    }

    let cfg = QuadratureConfig::default();
    let checks = verify::run_suite(&model, suite, &cfg, &overrides);

    // Typo protection: every override must name a check that actually ran.
    for name in overrides.keys() {
        if !checks.iter().any(|c| c.name == name) {
            return Err(CliError::Usage(format!(
                "tolerance override '{name}' does not match any check in suite {suite}"
            )));
        }
    }

    match format {
        OutputFormat::Json => {
            let entries: Vec<serde_json::Value> = checks
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "name": c.name,
                        "residual": c.residual,
                        "threshold": c.threshold,
                        "verdict": if c.passed { "pass" } else { "fail" },
                    })
                })
                .collect();
            let report = serde_json::json!({
                "schema_version": output::SCHEMA_VERSION,
                "command": "verify",
                "suite": suite.as_str(),
                "omega-c": model.omega_c(),
                "hbar": model.hbar(),
                "checks": entries,
            });
            println!("{report}");
        }
        OutputFormat::Csv => {
            println!(
                "{:<34} {:>14} {:>12} {:>8}",
                "check", "residual", "threshold", "verdict"
            );
            for c in &checks {
                println!(
                    "{:<34} {:>14.6e} {:>12.1e} {:>8}",
                    c.name,
                    c.residual,
                    c.threshold,
                    if c.passed { "pass" } else { "FAIL" }
                );
            }
        }
    }

    let failed = checks.iter().filter(|c| !c.passed).count();
    if failed == 0 {
        Ok(0)
    } else {
        eprintln!("{failed} of {} checks failed", checks.len());
        Ok(1)
    }
}
