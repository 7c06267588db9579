//! Acceptance suite: ten end-to-end criteria covering unitarity, the
//! delay identity, closed form against quadrature, low-frequency laws,
//! the perfect-reflection limit, the cutoff mean mass, the kernel
//! identity, the convolution cross-check, simulator invariants and noise
//! fidelity.
//!
//! Each test prints one `criterion N: PASS/FAIL` line with the measured
//! numbers; run with
//!
//! ```bash
//! cargo test -p vacuum-mirror --test acceptance -- --nocapture --test-threads=1
//! ```
//!
//! to see the full report in order.

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vacuum_mirror::dynamics::{
    self, integrate_series, symmetrized_spectrum, synthesize_noise, synthesize_noise_in_band,
    welch_psd, SimulationConfig,
};
use vacuum_mirror::quadrature::QuadratureConfig;
use vacuum_mirror::spectra::{self, log_grid, MassMethod, SpectrumComponent, SpectrumMethod};
use vacuum_mirror::verify::loglog_slope;
use vacuum_mirror::MirrorModel;

/// Hand evaluation of the mass spectrum at ω = Ω (ħ = Ω = 1):
/// 0.8 (1.5 ln 2 - π/4)/(2π), cross-checked below against an independent
/// Simpson-rule oracle before anything is asserted against it.
const MASS_SPOT: f64 = 0.032381360091590956;

fn report(criterion: u32, passed: bool, start: Instant, detail: &str) {
    println!(
        "criterion {criterion:2}: {} ({:6.2}s) {detail}",
        if passed { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64(),
    );
}

fn mirror() -> MirrorModel {
    MirrorModel::new(1.0).unwrap()
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

#[test]
fn criterion_01_unitarity() {
    let start = Instant::now();
    let model = mirror();
    let mags = log_grid(1e-3, 1e3, 1000);
    let mut worst = 0.0f64;
    for &w in &mags {
        for sign in [-1.0, 1.0] {
            worst = worst.max(model.amplitudes(sign * w).unitarity_residual());
        }
    }
    let passed = worst < 1e-12;
    report(
        1,
        passed,
        start,
        &format!("max unitarity residual {worst:.3e} over 2000 frequencies (< 1e-12)"),
    );
    assert!(passed, "unitarity residual {worst:e} >= 1e-12");
}

#[test]
fn criterion_02_delay_identity() {
    let start = Instant::now();
    let model = mirror();
    let freqs = log_grid(1e-3, 1e3, 100);
    let mut worst = 0.0f64;
    for &w in &freqs {
        let h = 1e-5 * w.abs().max(model.omega_c());
        let fd = (model.phase_shift(w + h) - model.phase_shift(w - h)) / (2.0 * h);
        worst = worst.max((0.5 * fd / model.reflection_delay(w) - 1.0).abs());
    }
    let mut peak_dev = 0.0f64;
    for &oc in &[1.0, std::f64::consts::SQRT_2, 3.7] {
        let m = MirrorModel::new(oc).unwrap();
        peak_dev = peak_dev.max((m.reflection_delay(0.0) * oc - 1.0).abs());
    }
    let passed = worst < 1e-6 && peak_dev <= 2.0 * f64::EPSILON;
    report(
        2,
        passed,
        start,
        &format!(
            "finite-difference vs delay max rel {worst:.3e} (< 1e-6), \
             tau(0)*omega_c deviation {peak_dev:.3e} (<= 2 eps)"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_03_closed_form_vs_quadrature() {
    let start = Instant::now();
    let model = mirror();
    let grid = spectra::default_grid(&model);
    let closed = spectra::evaluate_grid(
        &model,
        SpectrumComponent::Mass,
        SpectrumMethod::ClosedForm,
        &grid,
        &cfg(),
    )
    .unwrap();
    let quad = spectra::evaluate_grid(
        &model,
        SpectrumComponent::Mass,
        SpectrumMethod::Quadrature,
        &grid,
        &cfg(),
    )
    .unwrap();
    let max_rel = closed
        .values()
        .iter()
        .zip(quad.values())
        .map(|(&c, &q)| ((c - q) / q).abs())
        .fold(0.0f64, f64::max);

    // Independent Simpson-rule oracle for the spot value at ω = Ω: the
    // delay-product integral on a uniform grid, no shared machinery with
    // the adaptive integrator.
    let n = 20_000;
    let h = 1.0 / n as f64;
    let tau = |u: f64| 1.0 / (1.0 + u * u);
    let f = |u: f64| u * (1.0 - u) * tau(u) * tau(1.0 - u);
    let mut simpson = f(0.0) + f(1.0);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        simpson += weight * f(i as f64 * h);
    }
    simpson *= h / 3.0 / PI;
    assert!(
        (simpson - MASS_SPOT).abs() < 1e-12,
        "frozen spot value disagrees with the Simpson oracle: {simpson:.17}"
    );

    let spot = spectra::mass_spectrum(&model, 1.0, MassMethod::ClosedForm, &cfg()).unwrap();
    let spot_rel = (spot / MASS_SPOT - 1.0).abs();
    // The value printed to six significant figures is 0.0323814.
    let printed_dev = (spot - 0.0323814).abs();

    let passed = max_rel < 1e-8 && spot_rel < 1e-6 && printed_dev < 5e-8;
    report(
        3,
        passed,
        start,
        &format!(
            "closed vs quadrature max rel {max_rel:.3e} over 400 points (< 1e-8), \
             spot value {spot:.7} vs oracle rel {spot_rel:.3e} (< 1e-6)"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_04_low_frequency_laws() {
    let start = Instant::now();
    let model = mirror();

    let ratio = |x: f64| {
        let w = x * model.omega_c();
        let c = spectra::mass_spectrum(&model, w, MassMethod::ClosedForm, &cfg()).unwrap();
        let lead = spectra::low_freq_asymptote(&model, SpectrumComponent::Mass, w).unwrap();
        c / lead
    };
    let r5 = ratio(0.05);
    let r1 = ratio(0.01);

    let band = log_grid(1e-3, 1e-2, 20);
    let slope_of = |component| {
        let s =
            spectra::evaluate_grid(&model, component, SpectrumMethod::Quadrature, &band, &cfg())
                .unwrap();
        loglog_slope(s.frequencies(), s.values())
    };
    let s00 = slope_of(SpectrumComponent::F0F0);
    let s11 = slope_of(SpectrumComponent::F1F1);

    let ratio5_ok = (0.999..=1.001).contains(&r5);
    let ratio1_ok = (r1 - 1.0).abs() <= 1e-4;
    let slopes_ok = (s00 - 5.0).abs() <= 0.01 && (s11 - 3.0).abs() <= 0.01;
    let passed = ratio5_ok && ratio1_ok && slopes_ok;
    report(
        4,
        passed,
        start,
        &format!(
            "mass/asymptote ratio {r5:.6} at 0.05*omega_c (required [0.999, 1.001]), \
             {r1:.6} at 0.01*omega_c (within 1e-4), slopes {s00:.4}/{s11:.4} (5/3 +- 0.01)"
        ),
    );
    // The quasistatic correction of the mass spectrum is exactly
    // -(3/5)(omega/omega_c)^2 + O(x^4), so the ratio at 0.05*omega_c is
    // 0.998502: the 1e-3 band cannot be met by the model itself. The
    // assertion states the required band faithfully and records the
    // measured value.
    assert!(
        ratio5_ok,
        "mass/asymptote ratio at 0.05*omega_c is {r5:.6}; required [0.999, 1.001], \
         exact value 1 - (3/5)(0.05)^2 + O(x^4) = 0.998502"
    );
    assert!(ratio1_ok, "ratio at 0.01*omega_c: {r1}");
    assert!(slopes_ok, "log-log slopes: f0f0 {s00}, f1f1 {s11}");
}

#[test]
fn criterion_05_perfect_reflection_limit() {
    let start = Instant::now();
    // omega_c = 1e4 * omega probes the perfect-reflection limit.
    let model = MirrorModel::new(1e4).unwrap();
    let w = 1.0;
    let f1f1 = spectra::force_spectrum(&model, SpectrumComponent::F1F1, w, &cfg()).unwrap();
    let f1f1_ratio = f1f1 / (w * w * w / (3.0 * PI));
    let mass = spectra::mass_spectrum(&model, w, MassMethod::ClosedForm, &cfg()).unwrap();
    let mass_ratio = mass * 6.0 * PI * model.omega_c() * model.omega_c() / (w * w * w);

    let passed = (f1f1_ratio - 1.0).abs() < 1e-3 && (mass_ratio - 1.0).abs() < 1e-3;
    report(
        5,
        passed,
        start,
        &format!(
            "radiation pressure ratio {f1f1_ratio:.8}, suppressed mass ratio {mass_ratio:.8} \
             (both within 1e-3 of 1)"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_06_mean_induced_mass() {
    let start = Instant::now();
    let model = mirror();

    let mut worst_rel = 0.0f64;
    for &lambda in &[1.0, 10.0, 1e3] {
        let quad = spectra::mean_induced_mass(&model, lambda, &cfg()).unwrap();
        let exact = spectra::mean_induced_mass_analytic(&model, lambda).unwrap();
        worst_rel = worst_rel.max(((quad - exact) / exact).abs());
    }

    // Logarithmic-divergence signature: successive decades of the cutoff
    // gain (hbar/2pi) ln 10 once the cutoff is far above omega_c.
    let decade_gain = 10f64.ln() / (2.0 * PI);
    let mut worst_decade = 0.0f64;
    let lambdas = [1e3, 1e4, 1e5, 1e6];
    for pair in lambdas.windows(2) {
        let lo = spectra::mean_induced_mass_analytic(&model, pair[0]).unwrap();
        let hi = spectra::mean_induced_mass_analytic(&model, pair[1]).unwrap();
        worst_decade = worst_decade.max(((hi - lo) - decade_gain).abs());
    }

    let passed = worst_rel < 1e-8 && worst_decade < 1e-6;
    report(
        6,
        passed,
        start,
        &format!(
            "quadrature vs antiderivative max rel {worst_rel:.3e} (< 1e-8), \
             decade-growth deviation {worst_decade:.3e} (< 1e-6)"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_07_kernel_identity() {
    let start = Instant::now();
    let model = mirror();
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let w1 = 10f64.powf(rng.gen_range(-3.0..3.0));
        let w2 = 10f64.powf(rng.gen_range(-3.0..3.0));
        let kernel = spectra::alpha_kernel(&model, SpectrumComponent::F0F0, w1, w2).unwrap();
        let product =
            (w1 + w2) * (w1 + w2) * model.reflection_delay(w1) * model.reflection_delay(w2);
        worst = worst.max((kernel - product).abs() / kernel.abs().max(product.abs()).max(1.0));
    }
    let passed = worst < 1e-12;
    report(
        7,
        passed,
        start,
        &format!("kernel vs delay-product max residual {worst:.3e} over 1e4 pairs (< 1e-12)"),
    );
    assert!(passed);
}

#[test]
fn criterion_08_convolution_cross_check() {
    let start = Instant::now();
    let model = mirror();

    let freqs = log_grid(0.1, 100.0, 20);
    let mut worst = 0.0f64;
    for &w in &freqs {
        let conv = spectra::mass_spectrum_via_convolution(&model, w, &cfg()).unwrap();
        let quad = spectra::mass_spectrum(&model, w, MassMethod::Quadrature, &cfg()).unwrap();
        worst = worst.max(((conv - quad) / quad).abs());
    }

    let mut worst_ratio = 0.0f64;
    for &lambda in &[10.0, 100.0] {
        let rel = spectra::variance_relation_check(&model, lambda, &cfg()).unwrap();
        worst_ratio = worst_ratio.max((rel.ratio() - 1.0).abs());
    }

    let passed = worst < 1e-8 && worst_ratio < 1e-6;
    report(
        8,
        passed,
        start,
        &format!(
            "convolution vs quadrature max rel {worst:.3e} at 20 frequencies (< 1e-8), \
             variance-relation ratio deviation {worst_ratio:.3e} (< 1e-6)"
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_09_simulator_invariants() {
    let start = Instant::now();
    let model = mirror();

    // One-million-step run under radiation-pressure noise, dt set by the
    // resolution bound of the [0, 5] band.
    let sim = SimulationConfig {
        model,
        m_bare: 1.0,
        dt: 0.02,
        steps: 1_000_000,
        seed: 424_242,
        mass_channel: false,
        noise_band: (0.0, 5.0),
    };
    let trajectory = dynamics::run_trajectory(&sim).unwrap();
    let d = &trajectory.diagnostics;
    let subluminal = d.max_velocity < 1.0;
    let dispersion_ok = d.max_dispersion_residual < 1e-9;

    // Constant-force oracle at FT/m = 1.
    let steps = 10_000;
    let dt = 1.0 / steps as f64;
    let forces = vec![1.0; steps];
    let states = integrate_series(1.0, dt, &forces, &[]).unwrap();
    let v = states.last().unwrap().velocity();
    let oracle = 1.0 / 2.0f64.sqrt();
    let v_ok = (v / oracle - 1.0).abs() < 1e-6;

    let passed = subluminal && dispersion_ok && v_ok;
    report(
        9,
        passed,
        start,
        &format!(
            "1e6-step run: max |v| {:.6} (< 1), max dispersion residual {:.3e} (< 1e-9); \
             constant-force v(T) rel error {:.3e} (< 1e-6)",
            d.max_velocity,
            d.max_dispersion_residual,
            (v / oracle - 1.0).abs()
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_10_noise_fidelity() {
    let start = Instant::now();
    let model = mirror();

    // Welch periodogram of the synthesized radiation-pressure noise with
    // 127 Hann segments against the symmetrized target, band-averaged.
    let dt = 0.05;
    let series = synthesize_noise(&model, SpectrumComponent::F1F1, 1 << 16, dt, 7).unwrap();
    let est = welch_psd(&series.samples, dt, 1024).unwrap();
    assert!(
        est.segments >= 100,
        "need >= 100 segments, got {}",
        est.segments
    );
    let ratio = est
        .band_ratio((0.2, 5.0), |w| {
            symmetrized_spectrum(&model, SpectrumComponent::F1F1, w)
        })
        .unwrap();
    let welch_ok = (ratio - 1.0).abs() < 0.05;

    // Mass-channel time average over 64 seeds against the band-cutoff
    // mean induced mass, within three standard errors.
    let band = (0.0, 5.0);
    let sample_dt = 0.02;
    let n = 1 << 15;
    let oc = model.omega_c();
    let mut means = Vec::with_capacity(64);
    for seed in 0..64u64 {
        let field =
            synthesize_noise_in_band(&model, SpectrumComponent::Field, n, sample_dt, seed, band)
                .unwrap();
        let mean_dm =
            field.samples.iter().map(|&phi| oc * phi * phi).sum::<f64>() / field.len() as f64;
        means.push(mean_dm);
    }
    let grand = means.iter().sum::<f64>() / means.len() as f64;
    let variance =
        means.iter().map(|m| (m - grand) * (m - grand)).sum::<f64>() / (means.len() - 1) as f64;
    let std_error = (variance / means.len() as f64).sqrt();
    let predicted = spectra::mean_induced_mass(&model, band.1, &cfg()).unwrap();
    let z = (grand - predicted).abs() / std_error;
    let mass_ok = z < 3.0;

    let passed = welch_ok && mass_ok;
    report(
        10,
        passed,
        start,
        &format!(
            "periodogram band ratio {ratio:.4} over [0.2, 5] (within 5%); \
             mass-channel mean {grand:.6} vs prediction {predicted:.6}, |z| = {z:.2} (< 3)"
        ),
    );
    assert!(passed);
}
