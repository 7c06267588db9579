//! Vacuum radiation-pressure and mass-fluctuation spectra of a pointlike
//! mirror, and the relativistic motion it performs under that noise.
//!
//! A partially transmitting mirror in the vacuum of a scalar field in
//! 1+1 dimensions stores field energy for a frequency-dependent delay.
//! For the lorentzian reflectivity model `r(ω) = -Ω/(Ω - iω)` this crate
//! computes, exactly and by independent numerical routes:
//!
//! - scattering amplitudes, phase shift and reflection delay, with
//!   unitarity and causality diagnostics ([`scattering`]);
//! - the one-sided vacuum correlation spectra of the force on the mirror
//!   and of its induced mass, including closed forms, quasistatic
//!   asymptotes, the field-autocorrelation convolution route, and the
//!   cutoff-regularized mean induced mass ([`spectra`]);
//! - stationary Gaussian noise realizations shaped to those spectra, and
//!   relativistic kick-drift trajectories of the mirror driven by them,
//!   with an optional fluctuating-mass channel ([`dynamics`]);
//! - named verification batteries over all of the above ([`verify`]).
//!
//! The adaptive integrator behind every spectrum quadrature lives in
//! [`quadrature`]; the `vacuum-mirror` binary ([`cli`]) exposes the five
//! subcommands `delay`, `spectrum`, `mean-mass`, `simulate` and `verify`
//! with CSV/JSON output.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example scattering_amplitudes   # amplitudes, delay, unitarity
//! cargo run --release --example mass_spectrum_routes    # four routes to one spectrum
//! cargo run --release --example mean_induced_mass       # cutoff sweep, log divergence
//! cargo run --release --example colored_noise_psd       # synthesis vs periodogram
//! cargo run --release --example relativistic_trajectory # noise-driven motion
//! cargo run --release --example newtonian_comparison    # relativistic vs Newton
//! cargo run --release --example verify_all              # every invariant battery
//! ```
//!
//! # Conventions
//!
//! Natural units with the light velocity equal to 1; ħ is carried as a
//! model parameter (default 1) and Ω sets the frequency scale. Fourier
//! transforms use the `dω/2π` measure, so a spectrum `C(ω)` integrates to
//! the variance as `∫ C dω/2π`. Vacuum spectra are one-sided: every
//! spectrum operation returns exactly 0 for ω ≤ 0.

pub mod cli;
pub mod dynamics;
pub mod quadrature;
pub mod scattering;
pub mod spectra;
pub mod verify;

pub use quadrature::{QuadratureConfig, QuadratureError, QuadratureResult};
pub use scattering::{AmplitudePair, MirrorModel, ModelError};
pub use spectra::{MassMethod, SpectraError, SpectrumComponent, SpectrumMethod, SpectrumSamples};
