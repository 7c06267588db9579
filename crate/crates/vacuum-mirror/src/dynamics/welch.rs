//! Welch-averaged periodogram for checking synthesized noise against its
//! target spectrum.
//!
//! Hann-windowed segments with 50% overlap; the estimate is the two-sided
//! spectral density in angular frequency with the dω/2π measure, i.e. the
//! same convention as the symmetrized synthesis targets, so the two can be
//! compared bin by bin without scale juggling.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

use super::DynamicsError;

/// Averaged periodogram on the one-sided bin set of the segment length.
#[derive(Debug, Clone)]
pub struct WelchEstimate {
    /// Angular frequencies ω_k = 2πk/(L dt), k = 0..=L/2.
    pub frequencies: Vec<f64>,
    /// Two-sided spectral density estimate at those frequencies.
    pub psd: Vec<f64>,
    pub segments: usize,
    pub segment_len: usize,
}

impl WelchEstimate {
    /// Ratio of the band-averaged estimate to the band-averaged target.
    /// `None` when fewer than two interior bins fall inside the band.
    pub fn band_ratio(&self, band: (f64, f64), target: impl Fn(f64) -> f64) -> Option<f64> {
        let mut est = 0.0;
        let mut tgt = 0.0;
        let mut bins = 0usize;
        for (idx, &w) in self.frequencies.iter().enumerate() {
            // Skip DC and Nyquist, which carry window artifacts.
            if idx == 0 || idx + 1 == self.frequencies.len() {
                continue;
            }
            if w >= band.0 && w <= band.1 {
                est += self.psd[idx];
                tgt += target(w);
                bins += 1;
            }
        }
        if bins >= 2 && tgt > 0.0 {
            Some(est / tgt)
        } else {
            None
        }
    }
}

/// Welch PSD of a real series with Hann segments of length `segment_len`
/// (a power of two) and 50% overlap.
pub fn welch_psd(
    samples: &[f64],
    dt: f64,
    segment_len: usize,
) -> Result<WelchEstimate, DynamicsError> {
    if segment_len < 8 || !segment_len.is_power_of_two() || segment_len > samples.len() {
        return Err(DynamicsError::InvalidSegmentLength {
            segment_len,
            samples: samples.len(),
        });
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(DynamicsError::InvalidTimeStep(dt));
    }

    let len = segment_len;
    let hop = len / 2;
    let segments = (samples.len() - len) / hop + 1;

    let window: Vec<f64> = (0..len)
        .map(|j| 0.5 * (1.0 - (2.0 * PI * j as f64 / len as f64).cos()))
        .collect();
    let window_power: f64 = window.iter().map(|w| w * w).sum();

    let fft = FftPlanner::new().plan_fft_forward(len);
    let mut acc = vec![0.0f64; len / 2 + 1];
    let mut buf = vec![Complex64::new(0.0, 0.0); len];

    for s in 0..segments {
        let start = s * hop;
        for j in 0..len {
            buf[j] = Complex64::new(samples[start + j] * window[j], 0.0);
        }
        fft.process(&mut buf);
        for (k, slot) in acc.iter_mut().enumerate() {
            *slot += buf[k].norm_sqr();
        }
    }

    let scale = dt / (segments as f64 * window_power);
    let d_omega = 2.0 * PI / (len as f64 * dt);
    Ok(WelchEstimate {
        frequencies: (0..=len / 2).map(|k| k as f64 * d_omega).collect(),
        psd: acc.iter().map(|a| a * scale).collect(),
        segments,
        segment_len: len,
    })
}
