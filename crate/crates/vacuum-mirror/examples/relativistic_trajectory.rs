//! Noise-driven relativistic trajectory with the fluctuating-mass channel.
//!
//! ```bash
//! cargo run --release --example relativistic_trajectory
//! ```

use vacuum_mirror::dynamics::{run_trajectory, SimulationConfig};
use vacuum_mirror::MirrorModel;

fn main() {
    let cfg = SimulationConfig {
        model: MirrorModel::new(1.0).expect("valid cutoff"),
        m_bare: 1.0,
        dt: 0.02,
        steps: 1 << 16,
        seed: 2024,
        mass_channel: true,
        noise_band: (0.0, 5.0),
    };
    let trajectory = run_trajectory(&cfg).expect("valid configuration");

    println!(
        "{:>10} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "t", "q", "p", "m", "v", "e"
    );
    for s in trajectory.states.iter().step_by(1 << 13) {
        println!(
            "{:>10.2} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            s.t,
            s.q,
            s.p,
            s.m,
            s.velocity(),
            s.energy()
        );
    }

    let d = &trajectory.diagnostics;
    println!("\nsteps:                       {}", cfg.steps);
    println!(
        "max |v|:                     {:.9} (always < 1)",
        d.max_velocity
    );
    println!(
        "max dispersion residual:     {:.3e}",
        d.max_dispersion_residual
    );
    println!("momentum variance:           {:.6}", d.momentum_variance);
    println!(
        "mass-channel mean:           {:.6} (band prediction {:.6})",
        d.mass_mean, d.mass_mean_predicted
    );
    if let Some(ratio) = d.force_periodogram_ratio {
        println!("force periodogram/target:    {ratio:.4}");
    }
}
