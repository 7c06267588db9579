//! Stationary Gaussian noise synthesis from the computed vacuum spectra.
//!
//! The vacuum spectra are one-sided; no classical stationary process can
//! have a one-sided spectrum, so synthesis targets the symmetrization
//! C_sym(ω) = (C(ω) + C(-ω))/2 = C(|ω|)/2. This reproduces symmetric
//! correlation functions (and in particular the variance), not commutators:
//! the surrogate is classical by construction.
//!
//! Shaping is done in the frequency domain: each FFT bin receives an
//! independent complex Gaussian coefficient with variance proportional to
//! C_sym at that bin, Hermitian symmetry makes the series real, and one
//! inverse transform produces the samples. The target spectrum is exact in
//! expectation and the cost is O(n log n).

use crate::scattering::MirrorModel;
use crate::spectra::{spectrum_closed_fast, SpectrumComponent};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rustfft::FftPlanner;
use std::f64::consts::PI;

use super::DynamicsError;

/// A discretely sampled stationary Gaussian realization together with the
/// configuration that generated it.
#[derive(Debug, Clone)]
pub struct NoiseSeries {
    pub dt: f64,
    pub samples: Vec<f64>,
    pub component: SpectrumComponent,
    pub model: MirrorModel,
    pub seed: u64,
    /// Angular-frequency window actually synthesized; bins outside are zero.
    pub band: (f64, f64),
}

impl NoiseSeries {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }

    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.samples
            .iter()
            .map(|x| (x - mean) * (x - mean))
            .sum::<f64>()
            / self.samples.len() as f64
    }
}

/// Two-sided synthesis target: the symmetrized spectrum C(|ω|)/2.
pub fn symmetrized_spectrum(model: &MirrorModel, component: SpectrumComponent, omega: f64) -> f64 {
    0.5 * spectrum_closed_fast(model, component, omega.abs())
}

/// Synthesize `n` samples (n a power of two) of stationary Gaussian noise
/// whose two-sided target spectrum is the symmetrized spectrum of
/// `component`, over the full band up to Nyquist.
///
/// Deterministic: the same arguments always produce the same series.
pub fn synthesize_noise(
    model: &MirrorModel,
    component: SpectrumComponent,
    n: usize,
    dt: f64,
    seed: u64,
) -> Result<NoiseSeries, DynamicsError> {
    let band = (0.0, f64::INFINITY);
    synthesize_noise_in_band(model, component, n, dt, seed, band)
}

/// Band-limited variant of [`synthesize_noise`]: bins with |ω| outside
/// `band` are zeroed. An empty band (lo == hi) produces the zero series.
pub fn synthesize_noise_in_band(
    model: &MirrorModel,
    component: SpectrumComponent,
    n: usize,
    dt: f64,
    seed: u64,
    band: (f64, f64),
) -> Result<NoiseSeries, DynamicsError> {
    if n < 2 || !n.is_power_of_two() {
        return Err(DynamicsError::NonPowerOfTwo(n));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(DynamicsError::InvalidTimeStep(dt));
    }
    if band.0.is_nan() || band.1.is_nan() || band.0 < 0.0 || band.1 < band.0 {
        return Err(DynamicsError::InvalidBand {
            lo: band.0,
            hi: band.1,
        });
    }

    let d_omega = 2.0 * PI / (n as f64 * dt);
    let norm = 1.0 / (n as f64 * dt);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];

    // Bins in ascending order; the draw sequence is part of the contract
    // that a (config, seed) pair reproduces a series bit for bit.
    for k in 0..=n / 2 {
        let omega = k as f64 * d_omega;
        if omega < band.0 || omega > band.1 {
            continue;
        }
        let sigma2 = symmetrized_spectrum(model, component, omega) * norm;
        if k == 0 || k == n / 2 {
            // Real coefficients at DC and Nyquist.
            let g: f64 = rng.sample(StandardNormal);
            coeffs[k] = Complex64::new(sigma2.sqrt() * g, 0.0);
        } else {
            let g_re: f64 = rng.sample(StandardNormal);
            let g_im: f64 = rng.sample(StandardNormal);
            let amp = (0.5 * sigma2).sqrt();
            let c = Complex64::new(amp * g_re, amp * g_im);
            coeffs[k] = c;
            coeffs[n - k] = c.conj();
        }
    }

    // Unnormalized inverse transform gives x_j = sum_k c_k e^{+2pi i jk/n},
    // matching the bin variances chosen above.
    FftPlanner::new().plan_fft_inverse(n).process(&mut coeffs);
    let samples = coeffs.iter().map(|z| z.re).collect();

    Ok(NoiseSeries {
        dt,
        samples,
        component,
        model: *model,
        seed,
        band,
    })
}
