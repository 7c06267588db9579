//! Scattering amplitudes, unitarity and the reflection delay profile.
//!
//! ```bash
//! cargo run --release --example scattering_amplitudes
//! ```

use vacuum_mirror::spectra::log_grid;
use vacuum_mirror::MirrorModel;

fn main() {
    let model = MirrorModel::new(1.0).expect("valid cutoff");

    println!("lorentzian mirror, omega_c = {}", model.omega_c());
    println!(
        "{:>10} {:>22} {:>22} {:>12} {:>12} {:>12}",
        "omega", "s", "r", "|s|^2+|r|^2", "delay", "phase"
    );
    for &w in &[0.0, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0] {
        let pair = model.amplitudes(w);
        println!(
            "{:>10.3} {:>22} {:>22} {:>12.8} {:>12.6} {:>12.6}",
            w,
            format!("{:.4}{:+.4}i", pair.s.re, pair.s.im),
            format!("{:.4}{:+.4}i", pair.r.re, pair.r.im),
            pair.s.norm_sqr() + pair.r.norm_sqr(),
            model.reflection_delay(w),
            model.phase_shift(w),
        );
    }

    // Worst-case unitarity deviation over a wide two-sided grid.
    let mut worst = 0.0f64;
    for &w in &log_grid(1e-3, 1e3, 1000) {
        for sign in [-1.0, 1.0] {
            worst = worst.max(model.amplitudes(sign * w).unitarity_residual());
        }
    }
    println!("\nmax unitarity residual over 2000 frequencies: {worst:.3e}");

    // The delay is half the frequency derivative of the phase shift.
    let w = 3.0;
    let h = 1e-5 * w;
    let fd = (model.phase_shift(w + h) - model.phase_shift(w - h)) / (2.0 * h);
    println!(
        "delay identity at omega = {w}: d(phase)/domega / 2 = {:.12}, delay = {:.12}",
        0.5 * fd,
        model.reflection_delay(w)
    );
}
