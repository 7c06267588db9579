//! Relativistic vs Newtonian integration of the same driving force.
//!
//! At weak drive the position discrepancy is second order in p/m; at
//! strong drive the Newtonian velocity sails past the light cone while
//! the relativistic one saturates below it.
//!
//! ```bash
//! cargo run --release --example newtonian_comparison
//! ```

use vacuum_mirror::dynamics::{
    integrate_series, integrate_series_newtonian, nonrelativistic_comparison, SimulationConfig,
};
use vacuum_mirror::MirrorModel;

fn constant_force_comparison(force: f64) {
    let steps = 10_000;
    let dt = 1.0 / steps as f64;
    let forces = vec![force; steps];
    let rel = integrate_series(1.0, dt, &forces, &[]).unwrap();
    let newt = integrate_series_newtonian(1.0, dt, &forces, &[]).unwrap();
    let (r, n) = (rel.last().unwrap(), newt.last().unwrap());
    let v_rel = r.velocity();
    let v_newt = n.p / n.m;
    println!(
        "F*T/m = {force:<6} v_rel = {v_rel:.8}  v_newton = {v_newt:.8}  \
         rel discrepancy = {:.3e}",
        (v_newt - v_rel) / v_rel
    );
}

fn main() {
    println!("constant force from rest, T = m = 1:");
    for force in [0.001, 0.01, 0.1, 1.0, 3.0] {
        constant_force_comparison(force);
    }

    println!("\nsame noise realization through both integrators:");
    let cfg = SimulationConfig {
        model: MirrorModel::new(1.0).expect("valid cutoff"),
        m_bare: 1.0,
        dt: 0.02,
        steps: 1 << 14,
        seed: 11,
        mass_channel: false,
        noise_band: (0.0, 5.0),
    };
    let cmp = nonrelativistic_comparison(&cfg).expect("valid configuration");
    let max_p = cmp
        .relativistic
        .iter()
        .map(|s| s.p.abs())
        .fold(0.0f64, f64::max);
    println!(
        "steps = {}, max |p|/m = {max_p:.4}, max position discrepancy = {:.6e}",
        cfg.steps, cmp.max_position_discrepancy
    );
}
