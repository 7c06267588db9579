//! Relativistic motion of the scatterer under spectrally colored noise.
//!
//! The equation of motion is integrated in momentum form: the kick
//! `p ← p + F dt` is exact for the momentum balance, the instantaneous mass
//! is refreshed from the bare mass plus the (optional) quadratic field
//! channel, and the drift advances the position with the end-of-step
//! velocity `p/√(p² + m²)`. Because the velocity is always derived from
//! momentum this way, |v| < 1 is a structural property of the integrator,
//! not a clamp.
//!
//! Back-action is neglected: force and field series are synthesized up
//! front and do not respond to the trajectory. The regime where this is a
//! faithful approximation is ħω ≪ m; the two noise channels are drawn
//! independently since no cross-spectrum between them is available.
//!
//! A single trajectory is integrated strictly sequentially. Everything
//! here is a pure function of its configuration, so ensemble runs
//! parallelize across seeds with no shared state.

mod noise;
mod welch;

pub use noise::{symmetrized_spectrum, synthesize_noise, synthesize_noise_in_band, NoiseSeries};
pub use welch::{welch_psd, WelchEstimate};

use crate::scattering::MirrorModel;
use crate::spectra::SpectrumComponent;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DynamicsError {
    #[error("sample count must be a power of two >= 2, got {0}")]
    NonPowerOfTwo(usize),
    #[error("time step must be positive and finite, got {0}")]
    InvalidTimeStep(f64),
    #[error("bare mass must be positive and finite, got {0}")]
    InvalidBareMass(f64),
    #[error("step count must be >= 1")]
    InvalidSteps,
    #[error("noise band [{lo}, {hi}] must satisfy 0 <= lo <= hi")]
    InvalidBand { lo: f64, hi: f64 },
    #[error(
        "resolution bound violated: dt * omega_max = {product} > 0.1 \
         (dt = {dt}, omega_max = {omega_max})"
    )]
    ResolutionBound {
        dt: f64,
        omega_max: f64,
        product: f64,
    },
    #[error("updated mass {m} is not positive (delta-m below negative bare mass)")]
    NonpositiveMass { m: f64 },
    #[error("delta-m series must be empty or one longer than the force series")]
    SeriesLengthMismatch,
    #[error("welch segment length {segment_len} invalid for {samples} samples")]
    InvalidSegmentLength { segment_len: usize, samples: usize },
}

/// Scatterer phase-space point. Energy and velocity are derived from the
/// stored momentum and mass, so the relativistic energy-momentum relation
/// holds by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryState {
    pub t: f64,
    pub q: f64,
    pub p: f64,
    pub m: f64,
}

impl TrajectoryState {
    /// Scatterer at rest at the origin.
    pub fn at_rest(m: f64) -> Self {
        Self {
            t: 0.0,
            q: 0.0,
            p: 0.0,
            m,
        }
    }

    /// Energy e = √(p² + m²).
    pub fn energy(&self) -> f64 {
        f64::hypot(self.p, self.m)
    }

    /// Velocity v = p/√(p² + m²); |v| < 1 whenever m > 0.
    pub fn velocity(&self) -> f64 {
        self.p / self.energy()
    }

    /// Relative deviation from e² = p² + m².
    pub fn dispersion_residual(&self) -> f64 {
        let e2 = self.energy() * self.energy();
        ((e2 - self.p * self.p - self.m * self.m) / e2).abs()
    }
}

/// One kick-drift update.
///
/// Momentum first (`p ← p + F dt`), then the mass refresh
/// (`m ← m_bare + dm_next`), then the position drift with the updated
/// velocity. Rejects a mass update that is not positive, which can only
/// happen if a caller feeds `dm_next < -m_bare`; the quadratic field
/// channel is nonnegative and never does.
pub fn step(
    state: &TrajectoryState,
    force: f64,
    dm_next: f64,
    m_bare: f64,
    dt: f64,
) -> Result<TrajectoryState, DynamicsError> {
    if !dt.is_finite() || dt <= 0.0 {
        return Err(DynamicsError::InvalidTimeStep(dt));
    }
    let p = state.p + force * dt;
    let m = m_bare + dm_next;
    if m.is_nan() || m <= 0.0 {
        return Err(DynamicsError::NonpositiveMass { m });
    }
    let q = state.q + dt * p / f64::hypot(p, m);
    Ok(TrajectoryState {
        t: state.t + dt,
        q,
        p,
        m,
    })
}

/// Full configuration of a noise-driven run.
#[derive(Debug, Clone, Copy)]
pub struct SimulationConfig {
    pub model: MirrorModel,
    pub m_bare: f64,
    pub dt: f64,
    pub steps: usize,
    pub seed: u64,
    /// Enable the fluctuating-mass channel Δm = Ω φ̄².
    pub mass_channel: bool,
    /// Angular-frequency window of the synthesized noise.
    pub noise_band: (f64, f64),
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<(), DynamicsError> {
        if !self.m_bare.is_finite() || self.m_bare <= 0.0 {
            return Err(DynamicsError::InvalidBareMass(self.m_bare));
        }
        if !self.dt.is_finite() || self.dt <= 0.0 {
            return Err(DynamicsError::InvalidTimeStep(self.dt));
        }
        if self.steps == 0 {
            return Err(DynamicsError::InvalidSteps);
        }
        let (lo, hi) = self.noise_band;
        if !hi.is_finite() || lo.is_nan() || lo < 0.0 || hi < lo {
            return Err(DynamicsError::InvalidBand { lo, hi });
        }
        // Keep at least ~60 samples per period of the fastest noise
        // component; the slack absorbs decimal rounding like 0.02 * 5.
        let product = self.dt * hi;
        if product > 0.1 * (1.0 + 1e-9) {
            return Err(DynamicsError::ResolutionBound {
                dt: self.dt,
                omega_max: hi,
                product,
            });
        }
        Ok(())
    }
}

/// Summary statistics of a run.
#[derive(Debug, Clone, Copy)]
pub struct TrajectoryDiagnostics {
    pub max_velocity: f64,
    pub max_dispersion_residual: f64,
    pub momentum_variance: f64,
    /// Time average of m - m_bare over the trajectory.
    pub mass_mean: f64,
    /// Band-consistent prediction for that average:
    /// (ħΩ/4π)[ln(1 + (ω_hi/Ω)²) - ln(1 + (ω_lo/Ω)²)].
    pub mass_mean_predicted: f64,
    /// Welch band-averaged ratio of the driving force periodogram to its
    /// synthesis target; `None` when the run is too short or the band too
    /// narrow to estimate.
    pub force_periodogram_ratio: Option<f64>,
}

/// A completed run: every recorded state plus diagnostics.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub states: Vec<TrajectoryState>,
    pub diagnostics: TrajectoryDiagnostics,
}

/// Offset mixed into the seed for the field channel so the force and mass
/// noises are independent streams of the same run seed.
const FIELD_SEED_OFFSET: u64 = 0x9e37_79b9_7f4a_7c15;

/// Drive the kick-drift integrator with synthesized radiation-pressure
/// noise, optionally with the fluctuating-mass channel.
pub fn run_trajectory(cfg: &SimulationConfig) -> Result<Trajectory, DynamicsError> {
    cfg.validate()?;
    let n = (cfg.steps + 1).next_power_of_two();
    let force = synthesize_noise_in_band(
        &cfg.model,
        SpectrumComponent::F1F1,
        n,
        cfg.dt,
        cfg.seed,
        cfg.noise_band,
    )?;
    let delta_m = if cfg.mass_channel {
        let field = synthesize_noise_in_band(
            &cfg.model,
            SpectrumComponent::Field,
            n,
            cfg.dt,
            cfg.seed.wrapping_add(FIELD_SEED_OFFSET),
            cfg.noise_band,
        )?;
        let oc = cfg.model.omega_c();
        field.samples.iter().map(|&phi| oc * phi * phi).collect()
    } else {
        Vec::new()
    };

    let states = integrate_series(
        cfg.m_bare,
        cfg.dt,
        &force.samples[..cfg.steps],
        if delta_m.is_empty() {
            &[]
        } else {
            &delta_m[..cfg.steps + 1]
        },
    )?;

    let diagnostics = diagnose(cfg, &states, &force);
    Ok(Trajectory {
        states,
        diagnostics,
    })
}

/// Integrate a force series relativistically from rest. `delta_m` is
/// either empty (constant bare mass) or one entry per state, starting with
/// the initial one.
pub fn integrate_series(
    m_bare: f64,
    dt: f64,
    forces: &[f64],
    delta_m: &[f64],
) -> Result<Vec<TrajectoryState>, DynamicsError> {
    if !m_bare.is_finite() || m_bare <= 0.0 {
        return Err(DynamicsError::InvalidBareMass(m_bare));
    }
    if !delta_m.is_empty() && delta_m.len() != forces.len() + 1 {
        return Err(DynamicsError::SeriesLengthMismatch);
    }
    let dm = |k: usize| if delta_m.is_empty() { 0.0 } else { delta_m[k] };

    let m0 = m_bare + dm(0);
    if m0.is_nan() || m0 <= 0.0 {
        return Err(DynamicsError::NonpositiveMass { m: m0 });
    }
    let mut states = Vec::with_capacity(forces.len() + 1);
    states.push(TrajectoryState::at_rest(m0));
    for (k, &f) in forces.iter().enumerate() {
        let next = step(states.last().unwrap(), f, dm(k + 1), m_bare, dt)?;
        states.push(next);
    }
    Ok(states)
}

/// Newtonian counterpart of [`integrate_series`]: `p ← p + F dt`,
/// `q ← q + (p/m) dt`, same mass series. The velocity p/m is unbounded,
/// which is exactly the defect the relativistic form removes.
pub fn integrate_series_newtonian(
    m_bare: f64,
    dt: f64,
    forces: &[f64],
    delta_m: &[f64],
) -> Result<Vec<TrajectoryState>, DynamicsError> {
    if !m_bare.is_finite() || m_bare <= 0.0 {
        return Err(DynamicsError::InvalidBareMass(m_bare));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(DynamicsError::InvalidTimeStep(dt));
    }
    if !delta_m.is_empty() && delta_m.len() != forces.len() + 1 {
        return Err(DynamicsError::SeriesLengthMismatch);
    }
    let dm = |k: usize| if delta_m.is_empty() { 0.0 } else { delta_m[k] };

    let mut states = Vec::with_capacity(forces.len() + 1);
    states.push(TrajectoryState::at_rest(m_bare + dm(0)));
    for (k, &f) in forces.iter().enumerate() {
        let prev = states.last().unwrap();
        let p = prev.p + f * dt;
        let m = m_bare + dm(k + 1);
        if m.is_nan() || m <= 0.0 {
            return Err(DynamicsError::NonpositiveMass { m });
        }
        states.push(TrajectoryState {
            t: prev.t + dt,
            q: prev.q + dt * p / m,
            p,
            m,
        });
    }
    Ok(states)
}

/// Relativistic and Newtonian trajectories of the same noise realization.
#[derive(Debug, Clone)]
pub struct ComparisonResult {
    pub relativistic: Vec<TrajectoryState>,
    pub newtonian: Vec<TrajectoryState>,
    pub max_position_discrepancy: f64,
}

/// Integrate the configured run with both integrators on the identical
/// noise realization and report the largest position discrepancy.
pub fn nonrelativistic_comparison(
    cfg: &SimulationConfig,
) -> Result<ComparisonResult, DynamicsError> {
    cfg.validate()?;
    let n = (cfg.steps + 1).next_power_of_two();
    let force = synthesize_noise_in_band(
        &cfg.model,
        SpectrumComponent::F1F1,
        n,
        cfg.dt,
        cfg.seed,
        cfg.noise_band,
    )?;
    let forces = &force.samples[..cfg.steps];
    let relativistic = integrate_series(cfg.m_bare, cfg.dt, forces, &[])?;
    let newtonian = integrate_series_newtonian(cfg.m_bare, cfg.dt, forces, &[])?;
    let max_position_discrepancy = relativistic
        .iter()
        .zip(&newtonian)
        .map(|(a, b)| (a.q - b.q).abs())
        .fold(0.0, f64::max);
    Ok(ComparisonResult {
        relativistic,
        newtonian,
        max_position_discrepancy,
    })
}

/// Band-consistent mean induced mass: the cutoff integral restricted to
/// the synthesis window.
pub fn band_mean_induced_mass(model: &MirrorModel, band: (f64, f64)) -> f64 {
    let oc = model.omega_c();
    let log1p_sq = |w: f64| {
        let z = w / oc;
        if z <= 1.0 {
            (z * z).ln_1p()
        } else {
            2.0 * z.ln() + (1.0 / (z * z)).ln_1p()
        }
    };
    model.hbar() * oc / (4.0 * PI) * (log1p_sq(band.1) - log1p_sq(band.0))
}

fn diagnose(
    cfg: &SimulationConfig,
    states: &[TrajectoryState],
    force: &NoiseSeries,
) -> TrajectoryDiagnostics {
    let mut max_velocity = 0.0f64;
    let mut max_dispersion = 0.0f64;
    let mut p_sum = 0.0;
    let mut p_sq_sum = 0.0;
    let mut dm_sum = 0.0;
    for s in states {
        max_velocity = max_velocity.max(s.velocity().abs());
        max_dispersion = max_dispersion.max(s.dispersion_residual());
        p_sum += s.p;
        p_sq_sum += s.p * s.p;
        dm_sum += s.m - cfg.m_bare;
    }
    let count = states.len() as f64;
    let p_mean = p_sum / count;
    let momentum_variance = p_sq_sum / count - p_mean * p_mean;

    let mass_mean = dm_sum / count;
    let mass_mean_predicted = if cfg.mass_channel {
        band_mean_induced_mass(&cfg.model, cfg.noise_band)
    } else {
        0.0
    };

    // Periodogram sanity ratio over the interior of the synthesis band.
    let force_periodogram_ratio = if force.samples.len() >= 4096 {
        let seg = (force.samples.len() / 64)
            .next_power_of_two()
            .clamp(256, 4096);
        welch_psd(&force.samples, cfg.dt, seg).ok().and_then(|est| {
            let width = cfg.noise_band.1 - cfg.noise_band.0;
            let inner = (
                cfg.noise_band.0 + 0.1 * width,
                cfg.noise_band.1 - 0.1 * width,
            );
            est.band_ratio(inner, |w| {
                symmetrized_spectrum(&cfg.model, SpectrumComponent::F1F1, w)
            })
        })
    } else {
        None
    };

    TrajectoryDiagnostics {
        max_velocity,
        max_dispersion_residual: max_dispersion,
        momentum_variance,
        mass_mean,
        mass_mean_predicted,
        force_periodogram_ratio,
    }
}
