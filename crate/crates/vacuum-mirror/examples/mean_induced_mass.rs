//! Cutoff-regularized mean induced mass and its logarithmic divergence.
//!
//! The stored-energy integral grows without bound as the UV cutoff is
//! raised, which is why the library has no cutoff-free entry point: each
//! decade of cutoff adds the same (hbar omega_c / 2 pi) ln 10.
//!
//! ```bash
//! cargo run --release --example mean_induced_mass
//! ```

use std::f64::consts::PI;
use vacuum_mirror::quadrature::QuadratureConfig;
use vacuum_mirror::spectra;
use vacuum_mirror::MirrorModel;

fn main() {
    let model = MirrorModel::new(1.0).expect("valid cutoff");
    let cfg = QuadratureConfig::default();

    println!(
        "{:>12} {:>18} {:>18} {:>12}",
        "cutoff", "quadrature", "antiderivative", "|difference|"
    );
    let mut previous = None;
    for &lambda in &[1.0, 10.0, 1e2, 1e3, 1e4, 1e5, 1e6] {
        let quad = spectra::mean_induced_mass(&model, lambda, &cfg).unwrap();
        let exact = spectra::mean_induced_mass_analytic(&model, lambda).unwrap();
        print!(
            "{lambda:>12.0e} {quad:>18.12} {exact:>18.12} {:>12.3e}",
            (quad - exact).abs()
        );
        if let Some(prev) = previous {
            let gain: f64 = exact - prev;
            print!("   decade gain {gain:.9}");
        }
        println!();
        previous = Some(exact);
    }
    println!(
        "\nasymptotic decade gain (hbar omega_c / 2 pi) ln 10 = {:.9}",
        10f64.ln() / (2.0 * PI)
    );

    // Mean and variance of the instantaneous mass are tied together:
    // the truncated-spectrum integral equals twice the squared mean.
    for &lambda in &[10.0, 100.0] {
        let rel = spectra::variance_relation_check(&model, lambda, &cfg).unwrap();
        println!(
            "variance relation at cutoff {lambda:>5}: spectrum integral {:.10e}, \
             2 <dm>^2 {:.10e}, ratio {:.9}",
            rel.spectrum_integral,
            rel.twice_mean_squared,
            rel.ratio()
        );
    }
}
