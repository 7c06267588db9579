//! The mass fluctuation spectrum by its four evaluation routes.
//!
//! The kernel quadrature, the reflection-delay closed form, the
//! field-autocorrelation convolution and the quasistatic asymptote must
//! all agree in their shared domains; this prints the values and the
//! worst closed-form/quadrature split over the default grid.
//!
//! ```bash
//! cargo run --release --example mass_spectrum_routes
//! ```

use vacuum_mirror::quadrature::QuadratureConfig;
use vacuum_mirror::spectra::{self, MassMethod, SpectrumComponent, SpectrumMethod};
use vacuum_mirror::MirrorModel;

fn main() {
    let model = MirrorModel::new(1.0).expect("valid cutoff");
    let cfg = QuadratureConfig::default();

    println!(
        "{:>10} {:>16} {:>16} {:>16} {:>16}",
        "omega", "quadrature", "closed form", "convolution", "asymptote"
    );
    for &w in &[0.002, 0.01, 0.05, 0.2, 1.0, 5.0, 50.0] {
        let quad = spectra::mass_spectrum(&model, w, MassMethod::Quadrature, &cfg).unwrap();
        let closed = spectra::mass_spectrum(&model, w, MassMethod::ClosedForm, &cfg).unwrap();
        let conv = spectra::mass_spectrum_via_convolution(&model, w, &cfg).unwrap();
        let asym = spectra::low_freq_asymptote(&model, SpectrumComponent::Mass, w).unwrap();
        println!("{w:>10.3} {quad:>16.9e} {closed:>16.9e} {conv:>16.9e} {asym:>16.9e}");
    }

    let grid = spectra::default_grid(&model);
    let closed = spectra::evaluate_grid(
        &model,
        SpectrumComponent::Mass,
        SpectrumMethod::ClosedForm,
        &grid,
        &cfg,
    )
    .unwrap();
    let quad = spectra::evaluate_grid(
        &model,
        SpectrumComponent::Mass,
        SpectrumMethod::Quadrature,
        &grid,
        &cfg,
    )
    .unwrap();
    let max_rel = closed
        .values()
        .iter()
        .zip(quad.values())
        .map(|(&c, &q)| ((c - q) / q).abs())
        .fold(0.0f64, f64::max);
    println!(
        "\nclosed form vs quadrature over {} grid points: max rel {max_rel:.3e}",
        grid.len()
    );

    // The energy-flux spectrum is omega^2 times the mass spectrum.
    let w = 1.0;
    let f00 = spectra::force_spectrum(&model, SpectrumComponent::F0F0, w, &cfg).unwrap();
    let mass = spectra::mass_spectrum(&model, w, MassMethod::Quadrature, &cfg).unwrap();
    println!(
        "energy-flux identity at omega = {w}: C_F0F0 = {f00:.12e}, omega^2 C_mm = {:.12e}",
        w * w * mass
    );
}
