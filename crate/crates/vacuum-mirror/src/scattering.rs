//! Scattering amplitudes, phase shift and reflection delay of a point
//! mirror with lorentzian reflectivity.
//!
//! The mirror is characterised by a single positive frequency `omega_c`
//! (written Ω below) acting as a high-frequency reflection cutoff:
//!
//! ```text
//! r(ω) = -Ω / (Ω - iω),      s(ω) = 1 + r(ω)
//! ```
//!
//! Positivity of Ω is equivalent to causality of the field scattering, so
//! model construction rejects anything else. The mirror sits at the origin;
//! the position phases that would otherwise dress the off-diagonal S-matrix
//! entries cancel in every modulus and in `det S`, hence in everything this
//! crate computes.
//!
//! All frequencies are reduced to x = ω/Ω internally so extreme grids
//! neither overflow nor underflow.

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("reflection cutoff omega_c must be positive and finite, got {0}")]
    InvalidOmegaC(f64),
    #[error("action scale hbar must be positive and finite, got {0}")]
    InvalidHbar(f64),
}

/// Physical configuration of the mirror: reflection cutoff Ω and the
/// action scale ħ (natural units, defaults to 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorModel {
    omega_c: f64,
    hbar: f64,
}

impl MirrorModel {
    /// Mirror with reflection cutoff `omega_c` and ħ = 1.
    pub fn new(omega_c: f64) -> Result<Self, ModelError> {
        Self::with_hbar(omega_c, 1.0)
    }

    /// Mirror with an explicit action scale.
    pub fn with_hbar(omega_c: f64, hbar: f64) -> Result<Self, ModelError> {
        if !omega_c.is_finite() || omega_c <= 0.0 {
            return Err(ModelError::InvalidOmegaC(omega_c));
        }
        if !hbar.is_finite() || hbar <= 0.0 {
            return Err(ModelError::InvalidHbar(hbar));
        }
        Ok(Self { omega_c, hbar })
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Transmission and reflection amplitudes at frequency `omega`.
    ///
    /// Valid for any real frequency; the amplitudes obey
    /// `r(-ω) = conj(r(ω))` and the pair is unitary at every real ω.
    pub fn amplitudes(&self, omega: f64) -> AmplitudePair {
        let x = omega / self.omega_c;
        // r = -1/(1 - ix), rationalized two ways to stay exact when x^2
        // would overflow.
        let r = if x.abs() <= 1.0 {
            let d = 1.0 + x * x;
            Complex64::new(-1.0 / d, -x / d)
        } else {
            let y = 1.0 / x;
            let d = y * y + 1.0;
            Complex64::new(-(y * y) / d, -y / d)
        };
        AmplitudePair {
            s: Complex64::new(1.0, 0.0) + r,
            r,
        }
    }

    /// Sum of the two scattering phase shifts, `Δ(ω) = arg det S(ω)`,
    /// unwrapped so that Δ is continuous with Δ(0) = π. For the lorentzian
    /// model this is exactly `π + 2 atan(ω/Ω)`, monotone in ω.
    pub fn phase_shift(&self, omega: f64) -> f64 {
        PI + 2.0 * (omega / self.omega_c).atan()
    }

    /// Reflection delay `τ(ω) = Ω/(Ω² + ω²)`, half the frequency
    /// derivative of [`MirrorModel::phase_shift`]. Even, strictly positive,
    /// maximal at ω = 0 where it equals 1/Ω.
    pub fn reflection_delay(&self, omega: f64) -> f64 {
        let x = omega / self.omega_c;
        (1.0 / self.omega_c) / (1.0 + x * x)
    }

    /// `det S(ω)` computed from the amplitudes as s² - r².
    pub fn det_s(&self, omega: f64) -> Complex64 {
        let pair = self.amplitudes(omega);
        pair.s * pair.s - pair.r * pair.r
    }
}

/// Transmission/reflection amplitude pair at one frequency.
///
/// Plain data: pairs can also be built by hand (e.g. the perfect mirror
/// s = 0, r = -1) to probe the kernels directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePair {
    pub s: Complex64,
    pub r: Complex64,
}

impl AmplitudePair {
    /// Deviation from unitarity of the scattering pair:
    /// `max(| |s|² + |r|² - 1 |, |s conj(r) + r conj(s)|)`.
    /// Zero means exactly unitary.
    pub fn unitarity_residual(&self) -> f64 {
        let diag = (self.s.norm_sqr() + self.r.norm_sqr() - 1.0).abs();
        let cross = (self.s * self.r.conj() + self.r * self.s.conj()).norm();
        diag.max(cross)
    }

    /// Deviation from the continuous-boundary identity s = 1 + r.
    pub fn boundary_residual(&self) -> f64 {
        (self.s - Complex64::new(1.0, 0.0) - self.r).norm()
    }
}
