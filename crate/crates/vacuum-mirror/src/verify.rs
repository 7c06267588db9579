//! Verification batteries: every module's invariants condensed into named,
//! thresholded checks that the CLI `verify` subcommand and the acceptance
//! suite can run and report uniformly.
//!
//! A check passes when `residual <= threshold`. Residuals are defined so
//! that zero is perfect: maximum deviation from unitarity, |ratio - 1| for
//! limit laws, |slope - expected| for scaling exponents, and so on.

use crate::dynamics::{self, symmetrized_spectrum, synthesize_noise, SimulationConfig};
use crate::quadrature::QuadratureConfig;
use crate::scattering::MirrorModel;
use crate::spectra::{self, MassMethod, SpectrumComponent, SpectrumMethod};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// One named verification check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: &'static str, residual: f64, threshold: f64, tol: &Overrides) -> Self {
        let threshold = tol.get(name).copied().unwrap_or(threshold);
        Self {
            name,
            residual,
            threshold,
            passed: residual <= threshold,
        }
    }
}

/// Per-check threshold overrides, keyed by check name.
pub type Overrides = HashMap<String, f64>;

/// The available verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Unitarity,
    ClosedForm,
    Asymptotes,
    Limits,
    Dispersion,
    All,
}

impl Suite {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Unitarity => "unitarity",
            Self::ClosedForm => "closedform",
            Self::Asymptotes => "asymptotes",
            Self::Limits => "limits",
            Self::Dispersion => "dispersion",
            Self::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unitarity" => Ok(Self::Unitarity),
            "closedform" => Ok(Self::ClosedForm),
            "asymptotes" => Ok(Self::Asymptotes),
            "limits" => Ok(Self::Limits),
            "dispersion" => Ok(Self::Dispersion),
            "all" => Ok(Self::All),
            other => Err(format!(
                "unknown suite '{other}' (expected unitarity|closedform|asymptotes|limits|dispersion|all)"
            )),
        }
    }
}

/// Run a suite against a model. Check names are stable identifiers usable
/// as threshold-override keys.
pub fn run_suite(
    model: &MirrorModel,
    suite: Suite,
    cfg: &QuadratureConfig,
    tol: &Overrides,
) -> Vec<Check> {
    match suite {
        Suite::Unitarity => suite_unitarity(model, tol),
        Suite::ClosedForm => suite_closedform(model, cfg, tol),
        Suite::Asymptotes => suite_asymptotes(model, cfg, tol),
        Suite::Limits => suite_limits(model, cfg, tol),
        Suite::Dispersion => suite_dispersion(model, tol),
        Suite::All => {
            let mut checks = suite_unitarity(model, tol);
            checks.extend(suite_closedform(model, cfg, tol));
            checks.extend(suite_asymptotes(model, cfg, tol));
            checks.extend(suite_limits(model, cfg, tol));
            checks.extend(suite_dispersion(model, tol));
            checks
        }
    }
}

/// Signed log-frequency grid used by the scattering batteries: `points`
/// log-spaced magnitudes over [1e-3, 1e3] Ω and their negatives.
fn signed_grid(model: &MirrorModel, points: usize) -> Vec<f64> {
    let mags = spectra::log_grid(1e-3 * model.omega_c(), 1e3 * model.omega_c(), points);
    let mut grid: Vec<f64> = mags.iter().map(|&w| -w).collect();
    grid.extend(mags);
    grid
}

pub fn suite_unitarity(model: &MirrorModel, tol: &Overrides) -> Vec<Check> {
    let grid = signed_grid(model, 1000);

    let mut unitarity = 0.0f64;
    let mut boundary = 0.0f64;
    let mut reality = 0.0f64;
    let mut evenness = 0.0f64;
    let mut below_bound = f64::NEG_INFINITY;
    for &w in &grid {
        let pair = model.amplitudes(w);
        unitarity = unitarity.max(pair.unitarity_residual());
        boundary = boundary.max(pair.boundary_residual());
        let conj = model.amplitudes(-w);
        reality = reality.max((conj.r - pair.r.conj()).norm());
        evenness = evenness
            .max((model.reflection_delay(w) - model.reflection_delay(-w)).abs() * model.omega_c());
        below_bound = below_bound.max(model.reflection_delay(w) * model.omega_c() - 1.0);
    }

    // Centered finite differences of the phase shift against the delay.
    let fd_grid = spectra::log_grid(1e-3 * model.omega_c(), 1e3 * model.omega_c(), 100);
    let mut fd_residual = 0.0f64;
    for &w in &fd_grid {
        let h = 1e-5 * w.abs().max(model.omega_c());
        let fd = (model.phase_shift(w + h) - model.phase_shift(w - h)) / (2.0 * h);
        let tau = model.reflection_delay(w);
        fd_residual = fd_residual.max((0.5 * fd / tau - 1.0).abs());
    }

    let tau0 = model.reflection_delay(0.0) * model.omega_c();

    vec![
        Check::new("unitarity_residual_max", unitarity, 1e-12, tol),
        Check::new("boundary_identity_max", boundary, 1e-15, tol),
        Check::new("reflection_reality_max", reality, 1e-15, tol),
        Check::new("delay_evenness_max", evenness, 0.0, tol),
        Check::new("delay_strictly_below_peak", below_bound, 0.0, tol),
        Check::new(
            "delay_peak_at_zero",
            (tau0 - 1.0).abs(),
            2.0 * f64::EPSILON,
            tol,
        ),
        Check::new("phase_derivative_vs_delay", fd_residual, 1e-6, tol),
    ]
}

pub fn suite_closedform(
    model: &MirrorModel,
    cfg: &QuadratureConfig,
    tol: &Overrides,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let oc = model.omega_c();
    let hbar = model.hbar();

    // Closed form against quadrature across the default grid.
    let grid = spectra::default_grid(model);
    let closed = spectra::evaluate_grid(
        model,
        SpectrumComponent::Mass,
        SpectrumMethod::ClosedForm,
        &grid,
        cfg,
    );
    let quad = spectra::evaluate_grid(
        model,
        SpectrumComponent::Mass,
        SpectrumMethod::Quadrature,
        &grid,
        cfg,
    );
    let residual = match (&closed, &quad) {
        (Ok(c), Ok(q)) => c
            .values()
            .iter()
            .zip(q.values())
            .map(|(&a, &b)| ((a - b) / b).abs())
            .fold(0.0f64, f64::max),
        _ => f64::INFINITY,
    };
    checks.push(Check::new("mass_closed_vs_quadrature", residual, 1e-8, tol));

    // Spot value at ω = Ω: hand evaluation (1.5 ln 2 - π/4) · 0.8/(2π),
    // linear in ħ²Ω.
    let spot_oracle = 0.032381360091590956 * hbar * hbar * oc;
    let spot = spectra::mass_spectrum(model, oc, MassMethod::ClosedForm, cfg)
        .map(|v| (v / spot_oracle - 1.0).abs())
        .unwrap_or(f64::INFINITY);
    checks.push(Check::new("mass_spot_value", spot, 1e-6, tol));

    // Kernel identity alpha00 = (ω1+ω2)² τ(ω1) τ(ω2) on seeded random pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut kernel_residual = 0.0f64;
    for _ in 0..10_000 {
        let w1 = oc * 10f64.powf(rng.gen_range(-3.0..3.0));
        let w2 = oc * 10f64.powf(rng.gen_range(-3.0..3.0));
        let a = spectra::alpha_kernel(model, SpectrumComponent::F0F0, w1, w2)
            .expect("kernel defined for force components");
        let b = (w1 + w2) * (w1 + w2) * model.reflection_delay(w1) * model.reflection_delay(w2);
        kernel_residual = kernel_residual.max((a - b).abs() / a.abs().max(b.abs()).max(1.0));
    }
    checks.push(Check::new("kernel_identity", kernel_residual, 1e-12, tol));

    // Convolution route against direct quadrature at 20 frequencies.
    let conv_grid = spectra::log_grid(0.1 * oc, 100.0 * oc, 20);
    let mut conv_residual = 0.0f64;
    for &w in &conv_grid {
        let conv = spectra::mass_spectrum_via_convolution(model, w, cfg);
        let quad = spectra::mass_spectrum(model, w, MassMethod::Quadrature, cfg);
        match (conv, quad) {
            (Ok(c), Ok(q)) => conv_residual = conv_residual.max(((c - q) / q).abs()),
            _ => conv_residual = f64::INFINITY,
        }
    }
    checks.push(Check::new(
        "convolution_vs_quadrature",
        conv_residual,
        1e-8,
        tol,
    ));

    // Mean induced mass: quadrature against the antiderivative.
    let mut mean_residual = 0.0f64;
    for &lambda in &[oc, 10.0 * oc, 1e3 * oc] {
        let q = spectra::mean_induced_mass(model, lambda, cfg);
        let a = spectra::mean_induced_mass_analytic(model, lambda);
        match (q, a) {
            (Ok(q), Ok(a)) => mean_residual = mean_residual.max(((q - a) / a).abs()),
            _ => mean_residual = f64::INFINITY,
        }
    }
    checks.push(Check::new(
        "mean_mass_quadrature_vs_analytic",
        mean_residual,
        1e-8,
        tol,
    ));

    // Logarithmic growth: successive decades of the cutoff differ by
    // (ħΩ/2π) ln 10 once the cutoff is far above Ω.
    let decade_gain = hbar * oc / (2.0 * PI) * 10f64.ln();
    let mut growth_residual = 0.0f64;
    let lambdas = [1e3 * oc, 1e4 * oc, 1e5 * oc, 1e6 * oc];
    for pair in lambdas.windows(2) {
        let lo = spectra::mean_induced_mass_analytic(model, pair[0]).expect("valid cutoff");
        let hi = spectra::mean_induced_mass_analytic(model, pair[1]).expect("valid cutoff");
        growth_residual = growth_residual.max(((hi - lo) - decade_gain).abs() / (hbar * oc));
    }
    checks.push(Check::new(
        "mean_mass_log_growth",
        growth_residual,
        1e-6,
        tol,
    ));

    // Mean/variance relation at two cutoffs.
    for (name, lambda) in [
        ("variance_relation_lambda10", 10.0 * oc),
        ("variance_relation_lambda100", 100.0 * oc),
    ] {
        let residual = spectra::variance_relation_check(model, lambda, cfg)
            .map(|rel| (rel.ratio() - 1.0).abs())
            .unwrap_or(f64::INFINITY);
        checks.push(Check::new(name, residual, 1e-6, tol));
    }

    checks
}

pub fn suite_asymptotes(
    model: &MirrorModel,
    cfg: &QuadratureConfig,
    tol: &Overrides,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let oc = model.omega_c();

    // Quasistatic ratio of the mass spectrum to its leading ω³ law.
    for (name, x, threshold) in [
        ("mass_asymptote_ratio_at_5pct", 0.05, 1e-3),
        ("mass_asymptote_ratio_at_1pct", 0.01, 1e-4),
    ] {
        let w = x * oc;
        let value = spectra::mass_spectrum(model, w, MassMethod::ClosedForm, cfg);
        let lead = spectra::low_freq_asymptote(model, SpectrumComponent::Mass, w);
        let residual = match (value, lead) {
            (Ok(v), Ok(l)) => (v / l - 1.0).abs(),
            _ => f64::INFINITY,
        };
        checks.push(Check::new(name, residual, threshold, tol));
    }

    // Log-log slopes of the force spectra in the quasistatic band.
    let band = spectra::log_grid(1e-3 * oc, 1e-2 * oc, 20);
    for (name, component, expected) in [
        ("f0f0_loglog_slope", SpectrumComponent::F0F0, 5.0),
        ("f1f1_loglog_slope", SpectrumComponent::F1F1, 3.0),
    ] {
        let residual = match spectra::evaluate_grid(
            model,
            component,
            SpectrumMethod::Quadrature,
            &band,
            cfg,
        ) {
            Ok(samples) => {
                let slope = loglog_slope(samples.frequencies(), samples.values());
                (slope - expected).abs()
            }
            Err(_) => f64::INFINITY,
        };
        checks.push(Check::new(name, residual, 0.01, tol));
    }

    checks
}

pub fn suite_limits(model: &MirrorModel, cfg: &QuadratureConfig, tol: &Overrides) -> Vec<Check> {
    let mut checks = Vec::new();
    let oc = model.omega_c();
    let hbar = model.hbar();

    // Perfect-reflection limit probed at ω = 10⁻⁴ Ω.
    let w = 1e-4 * oc;
    let f1f1 = spectra::force_spectrum(model, SpectrumComponent::F1F1, w, cfg)
        .map(|c| (c / (hbar * hbar * w * w * w / (3.0 * PI)) - 1.0).abs())
        .unwrap_or(f64::INFINITY);
    checks.push(Check::new("perfect_reflection_f1f1", f1f1, 1e-3, tol));

    let mass = spectra::mass_spectrum(model, w, MassMethod::ClosedForm, cfg)
        .map(|c| (c * 6.0 * PI * oc * oc / (hbar * hbar * w * w * w) - 1.0).abs())
        .unwrap_or(f64::INFINITY);
    checks.push(Check::new("perfect_reflection_mass", mass, 1e-3, tol));

    // Mass fluctuations vanish pointwise as the cutoff grows at fixed ω.
    let stiff = MirrorModel::with_hbar(100.0 * oc, hbar).expect("scaled model");
    let here = spectra::mass_spectrum(model, oc, MassMethod::ClosedForm, cfg);
    let there = spectra::mass_spectrum(&stiff, oc, MassMethod::ClosedForm, cfg);
    let residual = match (here, there) {
        (Ok(h), Ok(t)) => t / h,
        _ => f64::INFINITY,
    };
    checks.push(Check::new("mass_vanishing_delay", residual, 1e-3, tol));

    // One-sidedness: exact zeros for every component at ω <= 0.
    let mut one_sided = 0.0f64;
    for &w in &[-10.0 * oc, -oc, -1e-3 * oc, 0.0] {
        for component in [
            SpectrumComponent::F0F0,
            SpectrumComponent::F1F1,
            SpectrumComponent::F0F1,
        ] {
            if let Ok(v) = spectra::force_spectrum(model, component, w, cfg) {
                one_sided = one_sided.max(v.abs());
            }
        }
        if let Ok(v) = spectra::mass_spectrum(model, w, MassMethod::ClosedForm, cfg) {
            one_sided = one_sided.max(v.abs());
        }
        one_sided = one_sided.max(spectra::field_autocorrelation(model, w).abs());
    }
    checks.push(Check::new("spectra_one_sided", one_sided, 0.0, tol));

    // Nonnegativity over the default grid, all computable components.
    let grid = spectra::default_grid(model);
    let mut min_value = f64::INFINITY;
    for (component, method) in [
        (SpectrumComponent::F0F0, SpectrumMethod::Quadrature),
        (SpectrumComponent::F1F1, SpectrumMethod::Quadrature),
        (SpectrumComponent::Mass, SpectrumMethod::ClosedForm),
        (SpectrumComponent::Field, SpectrumMethod::ClosedForm),
    ] {
        match spectra::evaluate_grid(model, component, method, &grid, cfg) {
            Ok(samples) => min_value = samples.values().iter().copied().fold(min_value, f64::min),
            Err(_) => min_value = f64::NEG_INFINITY,
        }
    }
    checks.push(Check::new(
        "spectra_nonnegative",
        -min_value.min(0.0),
        0.0,
        tol,
    ));

    checks
}

pub fn suite_dispersion(model: &MirrorModel, tol: &Overrides) -> Vec<Check> {
    let mut checks = Vec::new();
    let oc = model.omega_c();

    // Constant-force oracle: v(T) = FT/sqrt(m² + F²T²) at FT/m = 1.
    let steps = 1000;
    let dt = 1.0 / steps as f64;
    let forces = vec![1.0; steps];
    let residual = match dynamics::integrate_series(1.0, dt, &forces, &[]) {
        Ok(states) => {
            let v = states.last().expect("nonempty").velocity();
            (v / (1.0 / 2.0f64.sqrt()) - 1.0).abs()
        }
        Err(_) => f64::INFINITY,
    };
    checks.push(Check::new("constant_force_velocity", residual, 1e-6, tol));

    // Noise-driven run: dispersion relation, subluminality, causality,
    // determinism.
    let cfg_sim = SimulationConfig {
        model: *model,
        m_bare: model.hbar() * oc,
        dt: 0.1 / (5.0 * oc),
        steps: 1 << 15,
        seed: 20_420,
        mass_channel: true,
        noise_band: (0.0, 5.0 * oc),
    };
    match (
        dynamics::run_trajectory(&cfg_sim),
        dynamics::run_trajectory(&cfg_sim),
    ) {
        (Ok(a), Ok(b)) => {
            checks.push(Check::new(
                "trajectory_dispersion_residual",
                a.diagnostics.max_dispersion_residual,
                1e-9,
                tol,
            ));
            checks.push(Check::new(
                "trajectory_subluminal",
                a.diagnostics.max_velocity,
                1.0,
                tol,
            ));
            let max_step = a
                .states
                .windows(2)
                .map(|w| (w[1].q - w[0].q).abs() / cfg_sim.dt)
                .fold(0.0f64, f64::max);
            checks.push(Check::new("step_causality", max_step, 1.0, tol));
            let determinism = a
                .states
                .iter()
                .zip(&b.states)
                .map(|(x, y)| {
                    (x.q - y.q)
                        .abs()
                        .max((x.p - y.p).abs())
                        .max((x.m - y.m).abs())
                })
                .fold(0.0f64, f64::max);
            checks.push(Check::new("trajectory_determinism", determinism, 0.0, tol));
            let mass_mean =
                (a.diagnostics.mass_mean / a.diagnostics.mass_mean_predicted - 1.0).abs();
            checks.push(Check::new(
                "mass_channel_mean_single_seed",
                mass_mean,
                0.2,
                tol,
            ));
        }
        _ => {
            checks.push(Check::new(
                "trajectory_dispersion_residual",
                f64::INFINITY,
                1e-9,
                tol,
            ));
        }
    }

    // Free motion with the noise scaled away.
    let free_cfg = SimulationConfig {
        noise_band: (0.0, 0.0),
        mass_channel: false,
        steps: 1 << 10,
        ..cfg_sim
    };
    let free_residual = match dynamics::run_trajectory(&free_cfg) {
        Ok(t) => t
            .states
            .iter()
            .map(|s| s.q.abs().max(s.p.abs()))
            .fold(0.0f64, f64::max),
        Err(_) => f64::INFINITY,
    };
    checks.push(Check::new("free_motion", free_residual, 0.0, tol));

    // Synthesized radiation-pressure noise against its target spectrum,
    // band-averaged Welch periodogram with >= 100 segments.
    let dt = 0.1 / (2.0 * oc);
    let series = synthesize_noise(model, SpectrumComponent::F1F1, 1 << 16, dt, 7);
    let residual = match series {
        Ok(s) => dynamics::welch_psd(&s.samples, dt, 1024)
            .ok()
            .and_then(|est| {
                est.band_ratio((0.2 * oc, 5.0 * oc), |w| {
                    symmetrized_spectrum(model, SpectrumComponent::F1F1, w)
                })
            })
            .map(|r| (r - 1.0).abs())
            .unwrap_or(f64::INFINITY),
        Err(_) => f64::INFINITY,
    };
    checks.push(Check::new(
        "noise_periodogram_band_ratio",
        residual,
        0.05,
        tol,
    ));

    checks
}

/// Least-squares slope of ln(values) against ln(frequencies).
pub fn loglog_slope(frequencies: &[f64], values: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = frequencies
        .iter()
        .zip(values)
        .filter(|(&f, &v)| f > 0.0 && v > 0.0)
        .map(|(&f, &v)| (f.ln(), v.ln()))
        .collect();
    let n = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    sxy / sxx
}
